// Unit tests for exact integer and Laurent-polynomial arithmetic,
// including randomized ring-axiom checks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fc/bigint.hpp"
#include "fc/laurent.hpp"

using fc::BigInt;
using fc::LaurentPoly;

TEST_CASE("BigInt small arithmetic") {
    CHECK(BigInt(0).is_zero());
    CHECK((BigInt(3) + BigInt(4)).to_string() == "7");
    CHECK((BigInt(3) - BigInt(4)).to_string() == "-1");
    CHECK((BigInt(-3) * BigInt(-4)).to_string() == "12");
    CHECK((BigInt(1000000007LL) * BigInt(998244353LL)).to_string() == "998244359987710471");
    CHECK(BigInt(-5).to_ll() == -5);
}

TEST_CASE("BigInt large multiplication and division") {
    BigInt a(1);
    for (int i = 0; i < 40; ++i) a *= BigInt(1234567);
    BigInt b = a * a;
    CHECK(b.div_exact(a) == a);
    BigInt q, r;
    BigInt::divmod(b + BigInt(17), a, q, r);
    CHECK(q == a);
    CHECK(r == BigInt(17));
}

TEST_CASE("BigInt gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(-7)) == BigInt(7));
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)).is_zero());
}

TEST_CASE("BigInt agrees with long long on random values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long x = d(rng), y = d(rng);
        CHECK((BigInt(x) + BigInt(y)).to_ll() == x + y);
        CHECK((BigInt(x) - BigInt(y)).to_ll() == x - y);
        CHECK((BigInt(x) * BigInt(y)).to_string() == std::to_string(x * y));
        CHECK((BigInt(x) < BigInt(y)) == (x < y));
        if (y != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(x), BigInt(y), q, r);
            CHECK(q.to_ll() == x / y);
            CHECK(r.to_ll() == x % y);
        }
    }
}

TEST_CASE("Laurent basics") {
    LaurentPoly q = LaurentPoly::q_power(1);
    LaurentPoly p = LaurentPoly::q_power(-1);
    CHECK(q * p == LaurentPoly::one());
    // (q-1)(q+1) = q^2 - 1
    LaurentPoly qm1 = q - LaurentPoly::one();
    LaurentPoly qp1 = q + LaurentPoly::one();
    LaurentPoly expect = LaurentPoly::q_power(2) - LaurentPoly::one();
    CHECK(qm1 * qp1 == expect);
    // p - 1 has coefficients {-1: 1, 0: -1}
    LaurentPoly pm1 = p - LaurentPoly::one();
    CHECK(pm1.coeffs.size() == 2);
    CHECK(pm1.coeffs.at(-1) == BigInt(1));
    CHECK(pm1.coeffs.at(0) == BigInt(-1));
    CHECK(pm1.to_string() == "-1+q^-1");
    CHECK((qm1 - qm1).is_zero());
    CHECK(qm1.shifted(3) == LaurentPoly::q_power(4) - LaurentPoly::q_power(3));
    CHECK(qm1.eval_at_one().is_zero());
    CHECK(LaurentPoly::monomial(6, 2).content() == BigInt(6));
    CHECK(LaurentPoly::monomial(6, 2).div_coeff(BigInt(3)) == LaurentPoly::monomial(2, 2));
    CHECK(LaurentPoly::q_power(-3).is_q_power());
    CHECK(!LaurentPoly::monomial(-1, 0).is_q_power());
}

static LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expd(-4, 4), coeffd(-9, 9);
    LaurentPoly r;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) r += LaurentPoly::monomial(coeffd(rng), expd(rng));
    return r;
}

TEST_CASE("Laurent ring axioms on random triples") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 500; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * LaurentPoly::one() == a);
    }
}
