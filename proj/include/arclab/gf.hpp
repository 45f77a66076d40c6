// Exact arithmetic in GF(p^h) with polynomial-basis element encoding.
//
// Elements are encoded as integers in [0, q): the code sum c_i * p^i stands
// for the residue polynomial c_0 + c_1 x + ... + c_{h-1} x^{h-1} modulo the
// field's irreducible modulus. Multiplicative structure is table-driven
// (exp/log with respect to a primitive element), addition is digit-wise.
// Fields are immutable after construction and safe to share across threads.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace arclab {

using Elem = std::uint32_t;

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint32_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint32_t> fac;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fac.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fac.push_back(static_cast<std::uint32_t>(n));
    return fac;
}

// Dense polynomial arithmetic over GF(p), coefficients low-degree first.
// Only used during field construction and modulus validation.
struct PrimePoly {
    static std::vector<std::uint32_t> trim(std::vector<std::uint32_t> a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }

    static bool divides(std::uint32_t p, const std::vector<std::uint32_t>& g,
                        std::vector<std::uint32_t> f) {
        const std::size_t dg = g.size() - 1;
        // g monic
        while (f.size() >= g.size()) {
            if (f.back() == 0) {
                f.pop_back();
                continue;
            }
            const std::uint32_t c = f.back();
            const std::size_t off = f.size() - 1 - dg;
            for (std::size_t i = 0; i + 1 <= g.size(); ++i)
                f[off + i] = (f[off + i] + p * p - c * g[i] % p) % p;
            f.pop_back();
        }
        return std::all_of(f.begin(), f.end(), [](std::uint32_t x) { return x == 0; });
    }

    // Trial division by every monic polynomial of degree <= deg(f)/2.
    static bool irreducible(std::uint32_t p, const std::vector<std::uint32_t>& f) {
        const std::size_t h = f.size() - 1;
        if (h == 0) return false;
        if (h == 1) return true;
        for (std::size_t d = 1; d <= h / 2; ++d) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> g(d + 1, 0);
                std::uint64_t v = code;
                for (std::size_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(v % p);
                    v /= p;
                }
                g[d] = 1;
                if (divides(p, g, f)) return false;
            }
        }
        return true;
    }
};

}  // namespace detail

class Field {
public:
    static constexpr std::uint64_t max_q = 1ull << 16;

    Field(std::uint32_t p, std::uint32_t h) : Field(p, h, default_modulus(p, h)) {}

    Field(std::uint32_t p, std::uint32_t h, std::vector<std::uint32_t> modulus)
        : p_(p), h_(h), modulus_(std::move(modulus)) {
        if (!detail::is_prime_u32(p_)) throw std::invalid_argument("field: p is not prime");
        if (h_ < 1) throw std::invalid_argument("field: extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < h_; ++i) {
            q *= p_;
            if (q > max_q) throw std::invalid_argument("field: q exceeds the 2^16 cap");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (modulus_.size() != h_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("field: modulus must be monic of degree h");
        for (auto& c : modulus_) c %= p_;
        if (modulus_.back() != 1) throw std::invalid_argument("field: modulus must be monic of degree h");
        if (h_ > 1 && !detail::PrimePoly::irreducible(p_, modulus_))
            throw std::invalid_argument("field: modulus is reducible");
        build_tables();
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t h() const noexcept { return h_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Elem generator() const noexcept { return gen_; }

    bool operator==(const Field& o) const noexcept {
        return p_ == o.p_ && h_ == o.h_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const noexcept { return !(*this == o); }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_tab_.empty()) return add_tab_[a * q_ + b];
        return add_digits(a, b);
    }

    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        if (!neg_tab_.empty()) return neg_tab_[a];
        return neg_digits(a);
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("field: inversion of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // x^n for arbitrary non-negative n, reduced as a function on the field.
    Elem pow(Elem a, std::uint64_t n) const {
        if (a == 0) return n == 0 ? 1u : 0u;
        return exp_[static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1)) % (q_ - 1)];
    }

    // x^(num/den) on nonzero elements (exponent num * den^{-1} mod q-1), 0 -> 0.
    Elem pow_frac(Elem a, std::uint64_t num, std::uint64_t den) const {
        const std::uint64_t m = q_ - 1;
        if (std::gcd(den % m == 0 ? m : den % m, m) != 1)
            throw std::invalid_argument("field: fractional exponent denominator not invertible");
        if (a == 0) return 0;
        std::uint64_t dinv = inverse_mod(den % m, m);
        return pow(a, (num % m) * dinv % m);
    }

    Elem frobenius(Elem a, std::uint32_t e) const {
        e %= h_;
        std::uint64_t pe = 1;
        for (std::uint32_t i = 0; i < e; ++i) pe *= p_;
        return pow(a, pe);
    }

    // Absolute trace to GF(2): x + x^2 + ... + x^{2^{h-1}}.
    Elem trace2(Elem a) const {
        if (p_ != 2) throw std::domain_error("field: trace2 requires characteristic 2");
        Elem s = 0, y = a;
        for (std::uint32_t i = 0; i < h_; ++i) {
            s = add(s, y);
            y = mul(y, y);
        }
        return s;
    }

    std::uint32_t mult_order(Elem a) const {
        if (a == 0) throw std::domain_error("field: order of zero");
        std::uint32_t n = q_ - 1;
        for (std::uint32_t r : detail::prime_factors_u64(q_ - 1))
            while (n % r == 0 && pow(a, n / r) == 1) n /= r;
        return n;
    }

    // Prime-subfield scalar from a (possibly negative) integer.
    Elem scalar(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    std::vector<std::uint32_t> coeffs(Elem a) const {
        std::vector<std::uint32_t> d(h_);
        for (std::uint32_t i = 0; i < h_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    Elem from_coeffs(const std::vector<std::uint32_t>& c) const {
        if (c.size() != h_) throw std::invalid_argument("field: element tuple has wrong length");
        Elem v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= p_) throw std::invalid_argument("field: residue out of range");
            v = v * p_ + c[i];
        }
        return v;
    }

    // Least irreducible monic polynomial of degree h, ordered by ascending
    // low-coefficient code (equivalently descending-coefficient lex).
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t h) {
        if (!detail::is_prime_u32(p)) throw std::invalid_argument("field: p is not prime");
        if (h == 1) return {0, 1};  // X
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < h; ++i) count *= p;
        for (std::uint64_t code = 1; code < count; ++code) {
            std::vector<std::uint32_t> f(h + 1, 0);
            std::uint64_t v = code;
            for (std::uint32_t i = 0; i < h; ++i) {
                f[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            f[h] = 1;
            if (detail::PrimePoly::irreducible(p, f)) return f;
        }
        throw std::logic_error("field: no irreducible polynomial found");
    }

private:
    static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t quot = r / nr;
            std::swap(t -= quot * nt, nt);
            std::swap(r -= quot * nr, nr);
        }
        if (r != 1) throw std::invalid_argument("field: not invertible");
        return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
    }

    Elem add_digits(Elem a, Elem b) const {
        Elem v = 0, m = 1;
        for (std::uint32_t i = 0; i < h_; ++i) {
            v += (a % p_ + b % p_) % p_ * m;
            a /= p_;
            b /= p_;
            m *= p_;
        }
        return v;
    }

    Elem neg_digits(Elem a) const {
        Elem v = 0, m = 1;
        for (std::uint32_t i = 0; i < h_; ++i) {
            v += (p_ - a % p_) % p_ * m;
            a /= p_;
            m *= p_;
        }
        return v;
    }

    Elem mul_slow(Elem a, Elem b) const {
        std::vector<std::uint32_t> da(h_), db(h_), prod(2 * h_ - 1, 0);
        for (std::uint32_t i = 0; i < h_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (std::uint32_t i = 0; i < h_; ++i)
            for (std::uint32_t j = 0; j < h_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::size_t d = prod.size(); d-- > h_;) {
            const std::uint32_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (std::uint32_t i = 0; i <= h_; ++i)
                prod[d - h_ + i] = (prod[d - h_ + i] + p_ * p_ - c * modulus_[i] % p_) % p_;
        }
        Elem v = 0;
        for (std::uint32_t i = h_; i-- > 0;) v = v * p_ + prod[i];
        return v;
    }

    Elem pow_slow(Elem a, std::uint64_t n) const {
        Elem r = 1;
        while (n) {
            if (n & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            n >>= 1;
        }
        return r;
    }

    void build_tables() {
        const auto fac = detail::prime_factors_u64(q_ - 1);
        gen_ = 0;
        for (Elem g = 1; g < q_; ++g) {
            bool prim = true;
            for (std::uint32_t r : fac)
                if (pow_slow(g, (q_ - 1) / r) == 1) {
                    prim = false;
                    break;
                }
            if (prim) {
                gen_ = g;
                break;
            }
        }
        if (gen_ == 0) throw std::logic_error("field: no primitive element");
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        Elem x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            exp_[i + q_ - 1] = x;
            log_[x] = i;
            x = mul_slow(x, gen_);
        }
        if (x != 1) throw std::logic_error("field: generator order mismatch");
        if (p_ > 2 && static_cast<std::uint64_t>(q_) * q_ <= (1u << 16)) {
            add_tab_.resize(static_cast<std::size_t>(q_) * q_);
            neg_tab_.resize(q_);
            for (Elem a = 0; a < q_; ++a) {
                neg_tab_[a] = neg_digits(a);
                for (Elem b = 0; b < q_; ++b) add_tab_[a * q_ + b] = add_digits(a, b);
            }
        }
    }

    std::uint32_t p_ = 0, h_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem gen_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_tab_;
    std::vector<Elem> neg_tab_;
};

}  // namespace arclab
