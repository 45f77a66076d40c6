// Sparse homogeneous multivariate polynomials over GF(q): exponent-tuple terms
// in ascending lexicographic order (graded-lex once the degree is fixed), with
// exact arithmetic, evaluation, and exact division.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arclab/gf.hpp"
#include "arclab/linalg.hpp"

namespace arclab {

using Exponents = std::vector<std::uint8_t>;

class HomPoly {
public:
    HomPoly() = default;
    HomPoly(std::uint32_t nvars, std::uint32_t degree) : nvars_(nvars), degree_(degree) {}

    static HomPoly constant(const Field&, std::uint32_t nvars, Elem c) {
        HomPoly p(nvars, 0);
        if (c) p.terms_[Exponents(nvars, 0)] = c;
        return p;
    }

    static HomPoly linear(const Field&, const Vec& coeffs) {
        HomPoly p(static_cast<std::uint32_t>(coeffs.size()), 1);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (!coeffs[j]) continue;
            Exponents e(coeffs.size(), 0);
            e[j] = 1;
            p.terms_[std::move(e)] = coeffs[j];
        }
        return p;
    }

    static HomPoly monomial(std::uint32_t nvars, Exponents e, Elem c) {
        std::uint32_t d = 0;
        for (auto x : e) d += x;
        HomPoly p(nvars, d);
        if (c) p.terms_[std::move(e)] = c;
        return p;
    }

    std::uint32_t nvars() const { return nvars_; }
    std::uint32_t degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Elem>& terms() const { return terms_; }

    void set_term(Exponents e, Elem c) {
        if (c)
            terms_[std::move(e)] = c;
        else
            terms_.erase(e);
    }

    HomPoly add(const Field& F, const HomPoly& o) const {
        require_compatible(o);
        if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
            throw std::invalid_argument("hompoly: degree mismatch in addition");
        HomPoly out(nvars_, is_zero() ? o.degree_ : degree_);
        out.terms_ = terms_;
        for (const auto& [e, c] : o.terms_) {
            auto it = out.terms_.find(e);
            const Elem v = F.add(it == out.terms_.end() ? 0 : it->second, c);
            if (v)
                out.terms_[e] = v;
            else if (it != out.terms_.end())
                out.terms_.erase(it);
        }
        return out;
    }

    HomPoly scale(const Field& F, Elem c) const {
        HomPoly out(nvars_, degree_);
        if (!c) return out;
        for (const auto& [e, v] : terms_) out.terms_[e] = F.mul(v, c);
        return out;
    }

    HomPoly negate(const Field& F) const { return scale(F, F.neg(1)); }

    HomPoly sub(const Field& F, const HomPoly& o) const { return add(F, o.negate(F)); }

    HomPoly mul(const Field& F, const HomPoly& o) const {
        require_compatible(o);
        HomPoly out(nvars_, degree_ + o.degree_);
        if (is_zero() || o.is_zero()) return out;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e(nvars_);
                for (std::uint32_t i = 0; i < nvars_; ++i)
                    e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                auto it = out.terms_.find(e);
                const Elem v = F.add(it == out.terms_.end() ? 0 : it->second, F.mul(ca, cb));
                if (v)
                    out.terms_[std::move(e)] = v;
                else if (it != out.terms_.end())
                    out.terms_.erase(it);
            }
        return out;
    }

    Elem eval(const Field& F, const Vec& x) const {
        if (x.size() != nvars_) throw std::invalid_argument("hompoly: evaluation arity mismatch");
        Elem s = 0;
        for (const auto& [e, c] : terms_) {
            Elem v = c;
            for (std::uint32_t i = 0; i < nvars_; ++i)
                if (e[i]) v = F.mul(v, F.pow(x[i], e[i]));
            s = F.add(s, v);
        }
        return s;
    }

    // Exact quotient this / g, or nullopt when g does not divide exactly.
    std::optional<HomPoly> divide_exact(const Field& F, const HomPoly& g) const {
        require_compatible(g);
        if (g.is_zero()) throw std::invalid_argument("hompoly: division by zero");
        if (is_zero()) return HomPoly(nvars_, 0);
        if (degree_ < g.degree_) return std::nullopt;
        HomPoly rem = *this;
        HomPoly quo(nvars_, degree_ - g.degree_);
        const auto& glead = *g.terms_.rbegin();
        while (!rem.terms_.empty()) {
            const auto& rlead = *rem.terms_.rbegin();
            Exponents qe(nvars_);
            for (std::uint32_t i = 0; i < nvars_; ++i) {
                if (rlead.first[i] < glead.first[i]) return std::nullopt;
                qe[i] = static_cast<std::uint8_t>(rlead.first[i] - glead.first[i]);
            }
            const Elem qc = F.div(rlead.second, glead.second);
            HomPoly qterm = HomPoly::monomial(nvars_, qe, qc);
            quo.terms_[std::move(qe)] = qc;
            rem = rem.sub(F, qterm.mul(F, g));
        }
        return quo;
    }

    // Scale so the lexicographically least monomial has coefficient 1.
    HomPoly normalized(const Field& F) const {
        if (is_zero()) return *this;
        return scale(F, F.inv(terms_.begin()->second));
    }

    bool operator==(const HomPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    void require_compatible(const HomPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("hompoly: variable count mismatch");
    }

    std::uint32_t nvars_ = 0;
    std::uint32_t degree_ = 0;
    std::map<Exponents, Elem> terms_;
};

// Ascending-lex list of exponent tuples of the given total degree.
inline std::vector<Exponents> monomials_of_degree(std::uint32_t nvars, std::uint32_t degree) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    // recursive distribution, emitting in lex order
    auto rec = [&](auto&& self, std::uint32_t var, std::uint32_t left) -> void {
        if (var + 1 == nvars) {
            cur[var] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (std::uint32_t c = 0; c <= left; ++c) {
            cur[var] = static_cast<std::uint8_t>(c);
            self(self, var + 1, left - c);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arclab
