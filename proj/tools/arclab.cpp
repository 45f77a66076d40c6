// arclab: command-line workbench for arcs in PG(k-1,q).
//
// Subcommands: construct, verify, tangents, envelope, extend, classify, dual, code.
// Exit codes: 0 success / verified, 1 verification failure, 2 usage error.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "arclab/arc.hpp"
#include "arclab/classify.hpp"
#include "arclab/codes.hpp"
#include "arclab/envelope.hpp"
#include "arclab/extend.hpp"
#include "arclab/io.hpp"
#include "arclab/tangent.hpp"

namespace {

using namespace arclab;

struct Options {
    std::string format = "table";
    std::string out;
};

void emit(const Options& opt, const json& j, const std::string& table) {
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        f << j.dump(2) << '\n';
    }
    if (opt.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << table;
}

Arc load_arc(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open arc file: " + path);
    json j;
    f >> j;
    return arc_from_json(j, /*validate=*/false);
}

std::string describe_arc(const Arc& a) {
    std::ostringstream os;
    os << a.size() << "-point arc in PG(" << a.k - 1 << "," << a.F().q() << "), t=" << a.t();
    return os.str();
}

FieldPtr field_from_q(std::uint32_t q) {
    std::uint32_t pp = 2;
    while (pp * pp <= q && q % pp != 0) ++pp;
    if (q % pp != 0) pp = q;  // prime
    std::uint32_t hh = 0, v = q;
    while (v % pp == 0) {
        v /= pp;
        ++hh;
    }
    if (v != 1 || q < 2) throw std::invalid_argument("q must be a prime power");
    return std::make_shared<Field>(pp, hh);
}

int cmd_construct(const std::string& family, std::uint32_t q, std::uint32_t k, std::uint32_t e,
                  const Options& opt) {
    FieldPtr F = field_from_q(q);
    Params params;
    Arc a;
    if (family == "nrc") {
        if (k == 0) throw std::invalid_argument("construct nrc: --k required");
        a = nrc(F, k);
    } else if (family == "segre3space") {
        a = special_segre3space(F, e == 0 ? 1 : e);
        params.emplace_back("e", std::to_string(e == 0 ? 1 : e));
    } else if (family == "glynn") {
        a = special_glynn(F, &params);
    } else if (family == "kestenband") {
        a = special_kestenband(F, std::nullopt, &params);
    } else if (auto fam = opoly_family_from_name(family)) {
        a = hyperoval(F, OPolynomial{*fam, e}, &params);
    } else {
        throw std::invalid_argument("construct: unknown family " + family);
    }
    json j = arc_to_json(a);
    if (!params.empty()) {
        json pj = json::object();
        for (const auto& [key, val] : params) pj[key] = val;
        j["params"] = pj;
    }
    std::ostringstream tbl;
    tbl << "constructed " << family << ": " << describe_arc(a) << '\n';
    for (const auto& [key, val] : params) tbl << "  " << key << " = " << val << '\n';
    emit(opt, j, tbl.str());
    return 0;
}

int cmd_verify(const std::string& path, const Options& opt) {
    Arc a = load_arc(path);
    auto chk = is_arc(a.F(), a.points, a.k);
    json j{{"arc", describe_arc(a)}, {"is_arc", chk.ok}};
    std::ostringstream tbl;
    if (chk.ok) {
        tbl << describe_arc(a) << ": arc property holds\n";
    } else {
        j["witness"] = chk.witness;
        tbl << describe_arc(a) << ": NOT an arc; dependent k-subset at indices [";
        for (std::size_t i = 0; i < chk.witness.size(); ++i)
            tbl << (i ? "," : "") << chk.witness[i];
        tbl << "]\n";
    }
    emit(opt, j, tbl.str());
    return chk.ok ? 0 : 1;
}

int cmd_tangents(const std::string& path, const std::string& what, std::uint64_t seed,
                 std::uint64_t limit, const Options& opt) {
    Arc a = load_arc(path);
    const Field& F = a.F();
    const std::size_t n = a.size();
    const std::uint32_t k = a.k;
    if (a.t() < 1) throw std::invalid_argument("tangents: arc has t < 1");
    TangentSystem sys = TangentSystem::build_scaled(a);
    json j{{"arc", describe_arc(a)}, {"checks", json::object()}};
    std::ostringstream tbl;
    tbl << describe_arc(a) << '\n';
    bool all_ok = true;
    std::mt19937_64 rng(seed);

    auto record = [&](const std::string& name, std::uint64_t checked, std::uint64_t failures,
                      const std::string& first_bad, bool sampled) {
        j["checks"][name] = {{"checked", checked},
                             {"failures", failures},
                             {"sampled", sampled}};
        if (!first_bad.empty()) j["checks"][name]["first_counterexample"] = first_bad;
        tbl << "  " << name << ": " << checked << " checked" << (sampled ? " (sampled)" : "")
            << ", " << failures << " failed";
        if (!first_bad.empty()) tbl << "  first: " << first_bad;
        tbl << '\n';
        all_ok = all_ok && failures == 0;
    };

    auto tuple_str = [](const IndexTuple& d, std::initializer_list<std::size_t> more) {
        std::ostringstream os;
        os << "D=[";
        for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
        os << "]";
        for (auto v : more) os << ' ' << v;
        return os.str();
    };

    if (what == "lemma" || what == "all") {
        std::uint64_t checked = 0, failures = 0;
        std::string first;
        for_each_combination(n, k - 3u, [&](const IndexTuple& D) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < n; ++i)
                if (std::find(D.begin(), D.end(), i) == D.end()) rest.push_back(i);
            for (auto x : rest)
                for (auto y : rest)
                    for (auto z : rest) {
                        if (x == y || y == z || x == z) continue;
                        ++checked;
                        if (!check_lemma_of_tangents(sys, D, x, y, z)) {
                            ++failures;
                            if (first.empty()) first = tuple_str(D, {x, y, z});
                        }
                    }
        });
        record("lemma_of_tangents", checked, failures, first, false);
    }
    if (what == "scaled" || what == "all") {
        std::uint64_t checked = 0, failures = 0;
        std::string first;
        for_each_combination(n, k - 3u, [&](const IndexTuple& D) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < n; ++i)
                if (std::find(D.begin(), D.end(), i) == D.end()) rest.push_back(i);
            for (auto x : rest)
                for (auto y : rest) {
                    if (x == y) continue;
                    ++checked;
                    if (!check_scaled_pairwise(sys, D, x, y)) {
                        ++failures;
                        if (first.empty()) first = tuple_str(D, {x, y});
                    }
                }
        });
        record("scaled_pairwise", checked, failures, first, false);
    }
    auto sweep_sums = [&](bool deltas) {
        const std::size_t esize = k + static_cast<std::size_t>(sys.t());
        const std::size_t ssize = deltas ? static_cast<std::size_t>(sys.t()) + 2 : k - 2u;
        if (deltas && a.k > F.p()) {
            tbl << "  " << (deltas ? "delta_equations" : "sum_equations")
                << ": skipped (requires k <= p)\n";
            j["checks"]["delta_equations"] = {{"skipped", "requires k <= p"}};
            return;
        }
        const std::uint64_t total = binomial(n, esize) * binomial(esize, ssize);
        std::uint64_t checked = 0, failures = 0;
        std::string first;
        auto run_one = [&](const IndexTuple& E, const IndexTuple& S) {
            ++checked;
            const Elem v = deltas ? delta_equation(sys, E, S) : sum_equation(sys, E, S);
            if (v != 0) {
                ++failures;
                if (first.empty()) first = tuple_str(E, {});
            }
        };
        const bool sampled = total > limit;
        if (!sampled) {
            for_each_combination(n, esize, [&](const IndexTuple& E) {
                for_each_combination(esize, ssize, [&](const IndexTuple& pick) {
                    IndexTuple S;
                    for (auto i : pick) S.push_back(E[i]);
                    run_one(E, S);
                });
            });
        } else {
            for (std::uint64_t it = 0; it < limit; ++it) {
                IndexTuple all(n);
                std::iota(all.begin(), all.end(), 0);
                std::shuffle(all.begin(), all.end(), rng);
                IndexTuple E(all.begin(), all.begin() + esize);
                std::sort(E.begin(), E.end());
                std::shuffle(all.begin(), all.begin() + esize, rng);
                IndexTuple S(all.begin(), all.begin() + ssize);
                std::sort(S.begin(), S.end());
                IndexTuple E2 = E;
                run_one(E2, S);
            }
        }
        record(deltas ? "delta_equations" : "sum_equations", checked, failures, first, sampled);
    };
    if (what == "sums" || what == "all") sweep_sums(false);
    if (what == "deltas" || what == "all") sweep_sums(true);
    emit(opt, j, tbl.str());
    return all_ok ? 0 : 1;
}

int cmd_envelope(const std::string& path, bool complete, const Options& opt) {
    Arc a = load_arc(path);
    EnvelopeResult env = sbbt_envelope(a);
    json j{{"arc", describe_arc(a)},
           {"m", env.m},
           {"t", env.t},
           {"degree", env.phi.degree()},
           {"phi", poly_to_json(a.F(), env.phi)}};
    std::ostringstream tbl;
    tbl << describe_arc(a) << ": envelope degree " << env.phi.degree() << " (m=" << env.m
        << ", t=" << env.t << "), " << env.phi.terms().size() << " terms\n";
    auto factors = linear_factors(a.F(), env.phi);
    json fj = json::array();
    for (const auto& [ell, mult] : factors) {
        fj.push_back({{"form", vec_to_json(a.F(), ell.coeffs)}, {"multiplicity", mult}});
        tbl << "  linear factor (mult " << mult << "), dual point ";
        const Vec pt = normalized(a.F(), alternating_twist(a.F(), ell.coeffs));
        for (auto c : pt) tbl << c << ' ';
        tbl << '\n';
    }
    j["linear_factors"] = fj;
    if (complete) {
        Arc done = complete_via_envelope(a);
        j["completion"] = arc_to_json(done);
        tbl << "  completion: " << describe_arc(done) << '\n';
    }
    emit(opt, j, tbl.str());
    return 0;
}

int cmd_extend(const std::string& path, std::uint64_t target, const Options& opt) {
    Arc a = load_arc(path);
    ExtendReport rep = extendability_verdict(a, target);
    const char* verdict = rep.verdict == ExtendVerdict::obstructed ? "obstructed"
                          : rep.verdict == ExtendVerdict::possible ? "possible"
                                                                   : "undecided";
    json j{{"arc", describe_arc(a)},
           {"target", target},
           {"n", rep.n},
           {"rank", rep.rank},
           {"nullity", rep.nullity},
           {"verdict", verdict}};
    json wits = json::array();
    for (const auto& w : rep.witnesses) wits.push_back(vec_to_json(a.F(), w));
    j["witnesses"] = wits;
    std::ostringstream tbl;
    tbl << describe_arc(a) << " -> target " << target << ": " << verdict << " (P_" << rep.n
        << " rank " << rep.rank << ", nullity " << rep.nullity << ", " << rep.witnesses.size()
        << " all-nonzero witnesses)\n";
    emit(opt, j, tbl.str());
    return 0;
}

int cmd_classify(std::uint32_t q, std::uint32_t k, std::uint32_t size, bool complete,
                 unsigned jobs, const std::string& checkpoint, const Options& opt) {
    CensusReport rep = census(field_from_q(q), k, size, complete, jobs, checkpoint);
    json j{{"q", q},
           {"k", k},
           {"size", size},
           {"complete_only", complete},
           {"classes", rep.representatives.size()},
           {"arcs_containing_frame", rep.arcs_found},
           {"nodes_visited", rep.nodes_visited}};
    json reps = json::array();
    for (const auto& r : rep.representatives) reps.push_back(arc_to_json(r));
    j["representatives"] = reps;
    std::ostringstream tbl;
    tbl << "census PG(" << k - 1 << "," << q << "), size " << size
        << (complete ? ", complete only" : "") << ": " << rep.representatives.size()
        << " projective class(es)\n"
        << "  arcs containing the standard frame: " << rep.arcs_found << ", search nodes "
        << rep.nodes_visited << '\n';
    emit(opt, j, tbl.str());
    return 0;
}

int cmd_dual(const std::string& path, const Options& opt) {
    Arc a = load_arc(path);
    Arc d = dual_arc(a);
    emit(opt, arc_to_json(d), "dual: " + describe_arc(d) + '\n');
    return 0;
}

int cmd_code(const std::string& path, bool dualize, const Options& opt) {
    Arc a = load_arc(path);
    LinearCode c = code_from_arc(a);
    if (dualize) c = dual_code(c);
    const std::uint32_t d = min_distance(c);
    const bool mds = d == c.n() - c.k() + 1;
    json j = code_to_json(c);
    j["d"] = d;
    j["mds"] = mds;
    std::ostringstream tbl;
    tbl << (dualize ? "dual code" : "code") << ": [" << c.n() << "," << c.k() << "," << d
        << "] over GF(" << c.F().q() << ")" << (mds ? " (MDS)" : " (not MDS)") << '\n';
    emit(opt, j, tbl.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arclab: arcs, MDS codes, and tangent machinery in PG(k-1,q)"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--out", opt.out, "write JSON result to this file");

    std::string family, arcfile, what = "all", checkpoint;
    std::uint32_t q = 0, k = 0, e = 0, size = 0;
    std::uint64_t target = 0, seed = 12345, limit = 200000;
    bool complete = false, dualize = false;
    unsigned jobs = 1;

    auto add_sub = [&](const char* name, const char* desc) {
        auto* sc = app.add_subcommand(name, desc);
        sc->fallthrough();
        return sc;
    };
    auto* c_construct = add_sub("construct", "build a named arc family");
    c_construct->add_option("--family", family, "nrc | regular | translation | segre | glynn1 | glynn2 | payne | cherowitzo | subiaco1 | subiaco2 | subiaco3 | adelaide | segre3space | glynn | kestenband")->required();
    c_construct->add_option("--q", q, "field size (prime power)")->required();
    c_construct->add_option("--k", k, "ambient dimension (nrc)");
    c_construct->add_option("--e", e, "exponent parameter (translation / segre3space)");

    auto* c_verify = add_sub("verify", "check the arc property");
    c_verify->add_option("--arc", arcfile, "arc JSON file")->required();

    auto* c_tang = add_sub("tangents", "verify tangent-lemma identities");
    c_tang->add_option("--arc", arcfile, "arc JSON file")->required();
    c_tang->add_option("--verify", what, "lemma | scaled | sums | deltas | all")
        ->check(CLI::IsMember({"lemma", "scaled", "sums", "deltas", "all"}));
    c_tang->add_option("--seed", seed, "sampling seed (fixed default)");
    c_tang->add_option("--limit", limit, "max enumerated (E,S) pairs before sampling");

    auto* c_env = add_sub("envelope", "build the dual envelope phi(Z)");
    c_env->add_option("--arc", arcfile, "arc JSON file")->required();
    c_env->add_flag("--complete", complete, "append completion points via linear factors");

    auto* c_ext = add_sub("extend", "P_n extendability verdict");
    c_ext->add_option("--arc", arcfile, "arc JSON file")->required();
    c_ext->add_option("--target", target, "target arc size")->required();

    auto* c_cls = add_sub("classify", "census of arcs up to projectivity");
    c_cls->add_option("--q", q, "field size")->required();
    c_cls->add_option("--k", k, "ambient dimension")->required();
    c_cls->add_option("--size", size, "arc size")->required();
    c_cls->add_flag("--complete", complete, "count complete arcs only");
    c_cls->add_option("--jobs", jobs, "worker threads");
    c_cls->add_option("--checkpoint", checkpoint, "resumable progress file");

    auto* c_dual = add_sub("dual", "dual arc via the dual code");
    c_dual->add_option("--arc", arcfile, "arc JSON file")->required();

    auto* c_code = add_sub("code", "generator matrix and exact minimum distance");
    c_code->add_option("--arc", arcfile, "arc JSON file")->required();
    c_code->add_flag("--dual", dualize, "report the dual code instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        app.exit(help);
        return 0;
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (c_construct->parsed()) return cmd_construct(family, q, k, e, opt);
        if (c_verify->parsed()) return cmd_verify(arcfile, opt);
        if (c_tang->parsed()) return cmd_tangents(arcfile, what, seed, limit, opt);
        if (c_env->parsed()) return cmd_envelope(arcfile, complete, opt);
        if (c_ext->parsed()) return cmd_extend(arcfile, target, opt);
        if (c_cls->parsed()) return cmd_classify(q, k, size, complete, jobs, checkpoint, opt);
        if (c_dual->parsed()) return cmd_dual(arcfile, opt);
        if (c_code->parsed()) return cmd_code(arcfile, dualize, opt);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}
