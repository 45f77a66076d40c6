#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "arclab/arc.hpp"
#include "arclab/codes.hpp"

using namespace arclab;

namespace {

FieldPtr gf(std::uint32_t p, std::uint32_t h) { return std::make_shared<Field>(p, h); }

std::set<Vec> point_set(const Arc& a) {
    std::set<Vec> s;
    for (const auto& p : a.points) s.insert(normalized(a.F(), p));
    return s;
}

// the 12-point arc of PG(2,13)
Arc twelve_arc(FieldPtr F) {
    const int raw[12][3] = {{3, 4, 1},  {-3, 4, 1},  {3, -4, 1},  {-3, -4, 1},
                            {4, 3, 1},  {4, -3, 1},  {-4, 3, 1},  {-4, -3, 1},
                            {1, 1, 1},  {1, -1, 1},  {-1, 1, 1},  {-1, -1, 1}};
    std::vector<Vec> pts;
    for (auto& r : raw) pts.push_back({F->scalar(r[0]), F->scalar(r[1]), F->scalar(r[2])});
    return make_arc(std::move(F), 3, std::move(pts));
}

}  // namespace

TEST_CASE("is_arc basics") {
    auto F = gf(5, 1);
    SECTION("NRC in PG(2,5)") {
        Arc N = nrc(F, 3);
        CHECK(N.size() == 6);
        CHECK(is_arc(*F, N.points, 3).ok);
    }
    SECTION("three collinear points witness") {
        std::vector<Vec> pts = {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}};
        auto chk = is_arc(*F, pts, 3);
        REQUIRE_FALSE(chk.ok);
        // witness is a dependent triple on X1 = 0
        Mat m;
        for (auto i : chk.witness) m.push_back(pts[i]);
        CHECK(det(*F, m) == 0);
    }
    SECTION("the 12 listed points of PG(2,13) form an arc with t = 3") {
        Arc a12 = twelve_arc(gf(13, 1));
        CHECK(a12.size() == 12);
        CHECK(a12.t() == 3);
    }
    SECTION("sieve and brute force agree") {
        auto F7 = gf(7, 1);
        std::mt19937 rng(17);
        for (int it = 0; it < 40; ++it) {
            std::set<Vec> chosen;
            while (chosen.size() < 9) chosen.insert(point_at(*F7, 3, rng() % point_count(3, 7)));
            std::vector<Vec> pts(chosen.begin(), chosen.end());
            CHECK(detail::is_arc_bruteforce(*F7, pts, 3).ok ==
                  detail::is_arc_sieve(*F7, pts, 3).ok);
        }
    }
}

TEST_CASE("normal rational curves") {
    SECTION("k=4, q=7: every 4-subset has rank 4") {
        auto F = gf(7, 1);
        Arc N = nrc(F, 4);
        CHECK(N.size() == 8);
        for_each_combination(8, 4, [&](const std::vector<std::size_t>& idx) {
            Mat m;
            for (auto i : idx) m.push_back(N.points[i]);
            CHECK(det(*F, m) != 0);
        });
    }
    SECTION("q < k-1 is rejected") {
        CHECK_THROWS_AS(nrc(gf(3, 1), 5), std::invalid_argument);
    }
    SECTION("unique NRC through k+2 arc points") {
        auto F = gf(7, 1);
        Arc N = nrc(F, 4);
        // choose any 6 = k+2 of the 8 points; the reconstruction recovers N's point set
        std::vector<Vec> sub = {N.points[0], N.points[2], N.points[3],
                                N.points[5], N.points[6], N.points[7]};
        Arc M = nrc_through(F, 4, sub);
        CHECK(point_set(M) == point_set(N));
        // a different k+2 subset gives the same curve
        std::vector<Vec> sub2 = {N.points[1], N.points[2], N.points[4],
                                 N.points[5], N.points[6], N.points[0]};
        CHECK(point_set(nrc_through(F, 4, sub2)) == point_set(N));
    }
    SECTION("size never exceeds the trivial bound q+k-1") {
        for (auto [p, h, k] : {std::tuple{5u, 1u, 3u}, {2u, 3u, 4u}, {3u, 2u, 5u}}) {
            Arc N = nrc(gf(p, h), k);
            CHECK(N.size() <= N.F().q() + k - 1);
        }
    }
}

TEST_CASE("tangent lines of an NRC are pairwise disjoint") {
    // algebraic tangent at nu(1,t): span of the partial-derivative points
    auto check_for = [](FieldPtr F, std::uint32_t k) {
        Arc N = nrc(F, k);
        std::vector<Mat> tangents;
        for (Elem t = 0; t < F->q(); ++t) {
            Vec d0(k), d1(k);
            for (std::uint32_t j = 0; j < k; ++j) {
                // nu_j = X0^{k-1-j} X1^j
                d0[j] = F->mul(F->scalar(k - 1 - j), F->pow(t, j));
                d1[j] = F->mul(F->scalar(j), j == 0 ? 1 : F->pow(t, j - 1));
            }
            tangents.push_back(Mat{d0, d1});
        }
        {
            Vec d0(k, 0), d1(k, 0);
            d0[k - 2] = F->scalar(1);  // derivative data at (0,1)
            d1[k - 1] = F->scalar(k - 1);
            tangents.push_back(Mat{d1, d0});
        }
        for (std::size_t i = 0; i < tangents.size(); ++i)
            CHECK(rank(*F, tangents[i]) == 2);
        for (std::size_t i = 0; i < tangents.size(); ++i)
            for (std::size_t j = i + 1; j < tangents.size(); ++j) {
                Mat m = tangents[i];
                m.insert(m.end(), tangents[j].begin(), tangents[j].end());
                CHECK(rank(*F, m) == 4);  // disjoint lines span a solid
            }
    };
    check_for(gf(5, 1), 5);
    check_for(gf(7, 1), 4);
}

TEST_CASE("hyperoval families at q = 8") {
    auto F = gf(2, 3);
    for (auto fam : {OPolyFamily::regular, OPolyFamily::translation, OPolyFamily::segre,
                     OPolyFamily::glynn1, OPolyFamily::glynn2, OPolyFamily::payne,
                     OPolyFamily::cherowitzo, OPolyFamily::subiaco3}) {
        OPolynomial spec{fam, fam == OPolyFamily::translation ? 2u : 0u};
        Arc H = hyperoval(F, spec);
        INFO(opoly_family_name(fam));
        CHECK(H.size() == 10);
        CHECK(H.t() == 0);
    }
    SECTION("payne resolves to x^6 + x^4 + x^2") {
        auto vals = opoly_values(*F, OPolynomial{OPolyFamily::payne});
        for (Elem t = 0; t < 8; ++t)
            CHECK(vals[t] == F->add(F->add(F->pow(t, 6), F->pow(t, 4)), F->pow(t, 2)));
    }
    SECTION("violated conditions are rejected") {
        CHECK_THROWS_AS(hyperoval(gf(2, 4), OPolynomial{OPolyFamily::segre}),
                        std::invalid_argument);
        CHECK_THROWS_AS(hyperoval(F, OPolynomial{OPolyFamily::translation, 0}),
                        std::invalid_argument);
        CHECK_THROWS_AS(hyperoval(gf(2, 4), OPolynomial{OPolyFamily::translation, 2}),
                        std::invalid_argument);
        CHECK_THROWS_AS(hyperoval(gf(3, 2), OPolynomial{OPolyFamily::regular}),
                        std::invalid_argument);
        CHECK_THROWS_AS(hyperoval(F, OPolynomial{OPolyFamily::adelaide}),
                        std::invalid_argument);
    }
}

TEST_CASE("hyperoval families at q = 32") {
    auto F = gf(2, 5);
    for (auto fam : {OPolyFamily::translation, OPolyFamily::segre, OPolyFamily::payne,
                     OPolyFamily::cherowitzo, OPolyFamily::glynn1, OPolyFamily::glynn2}) {
        OPolynomial spec{fam, fam == OPolyFamily::translation ? 2u : 0u};
        INFO(opoly_family_name(fam));
        Arc H = hyperoval(F, spec);
        CHECK(H.size() == 34);
    }
}

TEST_CASE("hyperoval families needing quadratic extensions") {
    SECTION("adelaide at q = 16") {
        Params params;
        Arc H = hyperoval(gf(2, 4), OPolynomial{OPolyFamily::adelaide}, &params);
        CHECK(H.size() == 18);
        bool has_beta = false;
        for (auto& [k, v] : params) has_beta |= (k == "beta");
        CHECK(has_beta);
    }
    SECTION("subiaco I and II at q = 64") {
        Arc S1 = hyperoval(gf(2, 6), OPolynomial{OPolyFamily::subiaco1});
        CHECK(S1.size() == 66);
        Arc S2 = hyperoval(gf(2, 6), OPolynomial{OPolyFamily::subiaco2});
        CHECK(S2.size() == 66);
    }
    SECTION("subiaco parity conditions") {
        CHECK_THROWS_AS(hyperoval(gf(2, 3), OPolynomial{OPolyFamily::subiaco1}),
                        std::invalid_argument);
        CHECK_THROWS_AS(hyperoval(gf(2, 6), OPolynomial{OPolyFamily::subiaco3}),
                        std::invalid_argument);
    }
}

TEST_CASE("special arcs") {
    SECTION("segre 3-space arc") {
        auto F = gf(2, 3);
        Arc A = special_segre3space(F, 2);
        CHECK(A.size() == 9);
        CHECK(A.k == 4);
        // e = 1 degenerates to the normal rational curve
        CHECK(point_set(special_segre3space(F, 1)) == point_set(nrc(F, 4)));
        CHECK_THROWS_AS(special_segre3space(gf(2, 4), 2), std::invalid_argument);
    }
    SECTION("glynn arc in PG(4,9)") {
        Params params;
        Arc G = special_glynn(gf(3, 2), &params);
        CHECK(G.size() == 10);
        CHECK(G.t() == 3);
        REQUIRE(params.size() == 1);
        CHECK(params[0].second == "4");  // least eta with eta^4 = -1
        CHECK_THROWS_AS(special_glynn(gf(3, 1)), std::invalid_argument);
    }
    SECTION("kestenband arc at q = 9") {
        Params params;
        Arc K = special_kestenband(gf(3, 2), std::nullopt, &params);
        CHECK(K.size() == 7);
        REQUIRE(params.size() == 1);
        CHECK(params[0].second == "0,0,1,0,1,1,1,1,0");  // first H in row-major order
        CHECK(extensions(K).empty());
        // not contained in any conic: every 5-subset's conic misses some point
        bool on_conic = false;
        for_each_combination(7, 5, [&](const std::vector<std::size_t>& idx) {
            std::vector<Vec> five;
            for (auto i : idx) five.push_back(K.points[i]);
            const Conic c = conic_through(K.F(), five);
            bool all = true;
            for (const auto& p : K.points)
                if (conic_eval(K.F(), c, p) != 0) all = false;
            on_conic = on_conic || all;
        });
        CHECK_FALSE(on_conic);
        CHECK_THROWS_AS(special_kestenband(gf(2, 2)), std::invalid_argument);  // q = 4
        CHECK_THROWS_AS(special_kestenband(gf(7, 1)), std::invalid_argument);  // non-square
    }
    SECTION("kestenband rejects a bad H") {
        Mat bad = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};  // char poly (X-1)^3
        CHECK_THROWS_AS(special_kestenband(gf(3, 2), bad), std::invalid_argument);
    }
}

TEST_CASE("dual arcs") {
    SECTION("NRC in PG(2,5): dual is a 6-point arc of PG(2,5)") {
        Arc N = nrc(gf(5, 1), 3);
        Arc D = dual_arc(N);
        CHECK(D.k == 3);
        CHECK(D.size() == 6);
        CHECK(is_arc(D.F(), D.points, D.k).ok);
    }
    SECTION("double dual has the same code") {
        Arc N = nrc(gf(7, 1), 3);
        Arc DD = dual_arc(dual_arc(N));
        CHECK(same_code(code_from_arc(N), code_from_arc(DD)));
    }
    SECTION("hyperoval dual lands in PG(6,8)") {
        Arc H = hyperoval(gf(2, 3), OPolynomial{OPolyFamily::regular});
        Arc D = dual_arc(H);
        CHECK(D.k == 7);
        CHECK(D.size() == 10);
        CHECK(is_arc(D.F(), D.points, D.k).ok);
    }
    SECTION("degenerate dimensions are rejected") {
        auto F = gf(5, 1);
        Arc small = make_arc(F, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
        CHECK_THROWS_AS(dual_arc(small), std::invalid_argument);
    }
}

TEST_CASE("extensions and completeness") {
    SECTION("even conic extends only by the nucleus") {
        auto F = gf(2, 3);
        Arc C = nrc(F, 3);
        auto ext = extensions(C);
        REQUIRE(ext.size() == 1);
        CHECK(ext[0].coords == Vec{0, 1, 0});  // nucleus of X1 X3 - X2^2
    }
    SECTION("odd conic is complete") {
        Arc C = nrc(gf(7, 1), 3);
        CHECK(extensions(C).empty());
    }
    SECTION("hyperoval is complete") {
        Arc H = hyperoval(gf(2, 2), OPolynomial{OPolyFamily::regular});
        CHECK(extensions(H).empty());
    }
}

TEST_CASE("tangent counts follow the deficiency formula") {
    SECTION("NRC in PG(3,7): t = 2 through every 2-subset") {
        Arc N = nrc(gf(7, 1), 4);
        for_each_combination(N.size(), 2, [&](const std::vector<std::size_t>& S) {
            CHECK(hyperplanes_meeting_exactly(N, S) == 2);
        });
    }
    SECTION("hyperoval: no tangents") {
        Arc H = hyperoval(gf(2, 3), OPolynomial{OPolyFamily::segre});
        CHECK(hyperplanes_meeting_exactly(H, {0}) == 0);
    }
}

TEST_CASE("arc validation") {
    auto F = gf(5, 1);
    CHECK_THROWS_AS(make_arc(F, 3, {{1, 0, 0}, {2, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_arc(F, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), std::invalid_argument);
}
