#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arclab/classify.hpp"
#include "arclab/codes.hpp"

using namespace arclab;

namespace {
FieldPtr gf(std::uint32_t p, std::uint32_t h) { return std::make_shared<Field>(p, h); }
}

TEST_CASE("codes from arcs") {
    SECTION("NRC k=2, q=3 gives a [4,2] code") {
        LinearCode c = code_from_arc(nrc(gf(3, 1), 2));
        CHECK(c.n() == 4);
        CHECK(c.k() == 2);
        CHECK(min_distance(c) == 3);  // q - k + 2
    }
    SECTION("Reed-Solomon parameters [q+1, k, q-k+2]") {
        LinearCode c = code_from_arc(nrc(gf(5, 1), 2));
        CHECK(min_distance(c) == 5);
        LinearCode c2 = code_from_arc(nrc(gf(7, 1), 3));
        CHECK(min_distance(c2) == 6);
    }
    SECTION("hyperoval q=4 gives [6,3,4]") {
        LinearCode c = code_from_arc(hyperoval(gf(2, 2), OPolynomial{OPolyFamily::regular}));
        CHECK(c.n() == 6);
        CHECK(c.k() == 3);
        CHECK(min_distance(c) == 4);
    }
    SECTION("Glynn arc gives a [10,5,6] code over GF(9)") {
        LinearCode c = code_from_arc(special_glynn(gf(3, 2)));
        CHECK(min_distance(c) == 6);
        CHECK(is_mds(c));
    }
    SECTION("k=1 arcs give full-weight codes") {
        auto F = gf(5, 1);
        LinearCode c = make_code(F, Mat{{1, 2, 3, 4}});
        CHECK(min_distance(c) == 4);
    }
}

TEST_CASE("every nonzero codeword of an arc code has at most k-1 zeros") {
    for (auto arc : {nrc(gf(7, 1), 3), nrc(gf(5, 1), 4),
                     hyperoval(gf(2, 3), OPolynomial{OPolyFamily::translation, 2})}) {
        LinearCode c = code_from_arc(arc);
        const Field& F = c.F();
        for (std::uint64_t m = 0; m < point_count(static_cast<std::uint32_t>(c.k()), F.q());
             ++m) {
            const Vec u = point_at(F, static_cast<std::uint32_t>(c.k()), m);
            const Vec w = vec_mat(F, u, c.gen);
            std::size_t zeros = 0;
            for (Elem x : w) zeros += x == 0;
            CHECK(zeros <= c.k() - 1);
        }
    }
}

TEST_CASE("duality") {
    SECTION("dual of dual is the original code") {
        LinearCode c = code_from_arc(nrc(gf(7, 1), 3));
        CHECK(same_code(c, dual_code(dual_code(c))));
    }
    SECTION("dual of RS[6,2] over GF(5) is a [6,4,3] MDS code") {
        LinearCode d = dual_code(code_from_arc(nrc(gf(5, 1), 2)));
        CHECK(d.k() == 4);
        CHECK(min_distance(d) == 3);
        CHECK(is_mds(d));
    }
    SECTION("the RS dual generator columns form an NRC-equivalent arc") {
        Arc dual_pts = arc_from_code(dual_code(code_from_arc(nrc(gf(5, 1), 2))));
        CHECK(equivalent(dual_pts, nrc(gf(5, 1), 4)));
    }
}

TEST_CASE("Singleton bound on random codes") {
    std::mt19937 rng(23);
    auto F = gf(5, 1);
    int built = 0;
    while (built < 25) {
        Mat gen(3, Vec(7));
        for (auto& row : gen)
            for (auto& x : row) x = rng() % 5;
        if (rank(*F, gen) != 3) continue;
        ++built;
        LinearCode c{F, gen};
        CHECK(min_distance(c) <= c.n() - c.k() + 1);
    }
}

TEST_CASE("minimum distance guard") {
    auto F = gf(2, 13);
    Mat gen(2, Vec(3, 1));
    gen[1] = {0, 1, 2};
    CHECK_THROWS_AS(min_distance(make_code(F, gen)), std::invalid_argument);
}
