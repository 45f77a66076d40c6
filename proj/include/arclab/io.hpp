// JSON (de)serialization for fields, arcs, codes, and polynomials.
//
// Formats:
//   field  {"p":3,"h":2,"modulus":[1,0,1]}            coefficients low-degree first
//   elem   [c0,...,c_{h-1}]                           residue tuple
//   arc    {"field":{...},"k":3,"points":[[e,e,e],...]}  raw representatives, in order
//   code   {"field":{...},"n":..,"k":..,"gen":[[e,...],...]}  rows of the generator
//   poly   {"nvars":3,"degree":4,"terms":[{"exp":[..],"coef":e},...]}  graded-lex order
#pragma once

#include <nlohmann/json.hpp>

#include "arclab/arc.hpp"
#include "arclab/codes.hpp"
#include "arclab/gf.hpp"
#include "arclab/hompoly.hpp"

namespace arclab {

using json = nlohmann::json;

inline json field_to_json(const Field& F) {
    return json{{"p", F.p()}, {"h", F.h()}, {"modulus", F.modulus()}};
}

inline FieldPtr field_from_json(const json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto h = j.at("h").get<std::uint32_t>();
    if (j.contains("modulus"))
        return std::make_shared<Field>(p, h, j.at("modulus").get<std::vector<std::uint32_t>>());
    return std::make_shared<Field>(p, h);
}

inline json elem_to_json(const Field& F, Elem e) { return json(F.coeffs(e)); }

inline Elem elem_from_json(const Field& F, const json& j) {
    return F.from_coeffs(j.get<std::vector<std::uint32_t>>());
}

inline json vec_to_json(const Field& F, const Vec& v) {
    json out = json::array();
    for (Elem e : v) out.push_back(elem_to_json(F, e));
    return out;
}

inline Vec vec_from_json(const Field& F, const json& j) {
    Vec v;
    for (const auto& e : j) v.push_back(elem_from_json(F, e));
    return v;
}

inline json arc_to_json(const Arc& A) {
    json pts = json::array();
    for (const auto& p : A.points) pts.push_back(vec_to_json(A.F(), p));
    return json{{"field", field_to_json(A.F())}, {"k", A.k}, {"points", pts}};
}

inline Arc arc_from_json(const json& j, bool validate = true) {
    FieldPtr F = field_from_json(j.at("field"));
    const auto k = j.at("k").get<std::uint32_t>();
    std::vector<Vec> pts;
    for (const auto& pj : j.at("points")) {
        Vec p = vec_from_json(*F, pj);
        if (p.size() != k) throw std::invalid_argument("arc json: point length differs from k");
        pts.push_back(std::move(p));
    }
    return make_arc(std::move(F), k, std::move(pts), validate);
}

inline json code_to_json(const LinearCode& C) {
    json rows = json::array();
    for (const auto& r : C.gen) rows.push_back(vec_to_json(C.F(), r));
    return json{{"field", field_to_json(C.F())}, {"n", C.n()}, {"k", C.k()}, {"gen", rows}};
}

inline LinearCode code_from_json(const json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    Mat gen;
    for (const auto& r : j.at("gen")) gen.push_back(vec_from_json(*F, r));
    return make_code(std::move(F), std::move(gen));
}

inline json poly_to_json(const Field& F, const HomPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json ej = json::array();
        for (auto x : e) ej.push_back(static_cast<unsigned>(x));
        terms.push_back(json{{"exp", ej}, {"coef", elem_to_json(F, c)}});
    }
    return json{{"nvars", p.nvars()}, {"degree", p.degree()}, {"terms", terms}};
}

inline HomPoly poly_from_json(const Field& F, const json& j) {
    HomPoly p(j.at("nvars").get<std::uint32_t>(), j.at("degree").get<std::uint32_t>());
    for (const auto& tj : j.at("terms")) {
        Exponents e;
        std::uint32_t total = 0;
        for (const auto& x : tj.at("exp")) {
            e.push_back(static_cast<std::uint8_t>(x.get<unsigned>()));
            total += e.back();
        }
        if (e.size() != p.nvars() || total != p.degree())
            throw std::invalid_argument("poly json: inconsistent exponent tuple");
        p.set_term(std::move(e), elem_from_json(F, tj.at("coef")));
    }
    return p;
}

}  // namespace arclab
