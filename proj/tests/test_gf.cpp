#include <catch2/catch_amalgamated.hpp>

#include "arclab/gf.hpp"

using namespace arclab;

TEST_CASE("field construction and default moduli") {
    Field f2(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == std::vector<std::uint32_t>{0, 1});  // X

    Field f4(2, 2);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    Field f8(2, 3);
    CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    Field f9(3, 2);
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    Field f16(2, 4);
    CHECK(f16.modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});

    SECTION("GF(9) has eta with eta^4 = -1") {
        bool found = false;
        for (Elem x = 1; x < 9; ++x)
            if (f9.pow(x, 4) == f9.neg(1)) found = true;
        CHECK(found);
    }
    SECTION("GF(8) multiplicative group has order 7") {
        for (Elem x = 1; x < 8; ++x) CHECK(f8.pow(x, 7) == 1);
        CHECK(f8.mult_order(f8.generator()) == 7);
    }
    SECTION("rejects bad input") {
        CHECK_THROWS_AS(Field(6, 1), std::invalid_argument);            // composite p
        CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);  // (X+1)^2
        CHECK_THROWS_AS(Field(2, 17), std::invalid_argument);            // q cap
    }
}

TEST_CASE("field arithmetic identities") {
    for (auto [p, h] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 6u}}) {
        Field F(p, h);
        const Elem q = F.q();
        for (Elem a = 0; a < q; ++a) {
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        }
        // product of all nonzero elements is -1
        Elem prod = 1;
        for (Elem a = 1; a < q; ++a) prod = F.mul(prod, a);
        CHECK(prod == F.neg(1));
    }
}

TEST_CASE("field axioms, exhaustively for q <= 64") {
    for (auto [p, h] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 6u}}) {
        Field F(p, h);
        const Elem q = F.q();
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c))) FAIL("add assoc");
                    if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) FAIL("mul assoc");
                    if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)))
                        FAIL("distributivity");
                }
            }
    }
}

TEST_CASE("exponent reduction acts pointwise") {
    Field f8(2, 3);
    for (Elem x = 0; x < 8; ++x) {
        CHECK(f8.pow(x, 8) == x);           // x^q = x
        CHECK(f8.pow(x, 16) == f8.mul(x, x));  // x^16 = x^2
    }
    SECTION("fractional exponents, q = 8") {
        // 1/6 = 6 mod 7, so (x^{1/6})^6 = x on nonzero elements
        for (Elem x = 1; x < 8; ++x) CHECK(f8.pow(f8.pow_frac(x, 1, 6), 6) == x);
        CHECK(f8.pow_frac(0, 1, 6) == 0);
        CHECK_THROWS_AS(f8.pow_frac(3, 1, 7), std::invalid_argument);  // 7 not invertible mod 7
    }
}

TEST_CASE("frobenius is an automorphism fixing the prime field") {
    for (auto [p, h] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 6u}}) {
        Field F(p, h);
        for (std::uint32_t e = 0; e < F.h(); ++e) {
            for (Elem a = 0; a < F.q(); ++a) {
                if (e == 0) CHECK(F.frobenius(a, 0) == a);
                for (Elem b = 0; b < F.q(); ++b) {
                    CHECK(F.frobenius(F.add(a, b), e) ==
                          F.add(F.frobenius(a, e), F.frobenius(b, e)));
                    CHECK(F.frobenius(F.mul(a, b), e) ==
                          F.mul(F.frobenius(a, e), F.frobenius(b, e)));
                }
            }
            for (Elem c = 0; c < F.p(); ++c) CHECK(F.frobenius(c, e) == c);
        }
    }
    Field f9(3, 2);
    for (Elem a = 0; a < 9; ++a) CHECK(f9.frobenius(f9.frobenius(a, 1), 1) == a);
}

TEST_CASE("trace to GF(2)") {
    Field f4(2, 2);
    CHECK(f4.trace2(0) == 0);
    // trace 1 exactly on the two elements outside GF(2)
    std::size_t ones = 0;
    for (Elem x = 0; x < 4; ++x) {
        CHECK(f4.trace2(x) == f4.add(x, f4.mul(x, x)));
        if (f4.trace2(x) == 1) {
            ++ones;
            CHECK(x >= 2);
        }
    }
    CHECK(ones == 2);
    Field f8(2, 3);
    std::size_t ones8 = 0;
    for (Elem x = 0; x < 8; ++x) ones8 += f8.trace2(x) == 1;
    CHECK(ones8 == 4);
    Field f9(3, 2);
    CHECK_THROWS_AS(f9.trace2(1), std::domain_error);
}

TEST_CASE("power sums over the field") {
    // sum_t t^n = -1 when (q-1) | n and n > 0, else 0
    for (auto [p, h] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}, {2u, 5u}, {3u, 3u}, {2u, 4u}}) {
        Field F(p, h);
        const std::uint32_t q = F.q();
        for (std::uint32_t n = 0; n <= 2 * (q - 1); ++n) {
            Elem s = 0;
            for (Elem t = 0; t < q; ++t) s = F.add(s, F.pow(t, n));
            if (n > 0 && n % (q - 1) == 0)
                CHECK(s == F.neg(1));
            else if (n > 0)
                CHECK(s == 0);
        }
    }
}

TEST_CASE("element encoding round-trip") {
    Field f9(3, 2);
    for (Elem a = 0; a < 9; ++a) CHECK(f9.from_coeffs(f9.coeffs(a)) == a);
    CHECK(f9.scalar(-1) == 2);
    CHECK(f9.scalar(13) == 1);
    CHECK_THROWS_AS(f9.from_coeffs({1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(f9.inv(0), std::domain_error);
}
