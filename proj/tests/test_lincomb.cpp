/*
 * test_lincomb.cpp
 * ----------------
 * Sparse linear combinations, exact Laurent division, and exact rank
 * by fraction-free elimination, including the rank invariances under
 * q-power row scaling and row permutation.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fc/lincomb.hpp"

using namespace fc;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p += LaurentPoly::monomial(c, e);
    return p;
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3), exp(-2, 2);
    LaurentPoly p;
    for (int i = 0; i < 3; ++i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

} // namespace

TEST_CASE("linear combination arithmetic") {
    Word a{0}, b{1, 2};
    LinComb x;
    x.add(a, lp({{0, 1}}));
    x.add(b, lp({{1, 1}, {0, -1}}));

    CHECK(LinComb{} + x == x);
    CHECK((x - x).is_zero());

    LinComb shifted = x.scaled(LaurentPoly::q_power(1));
    CHECK(shifted.terms.at(a) == lp({{1, 1}}));
    CHECK(shifted.terms.at(b) == lp({{2, 1}, {1, -1}}));

    // Cancellation removes the key entirely.
    LinComb y = x;
    y.add(a, lp({{0, -1}}));
    CHECK(y.terms.count(a) == 0);
    CHECK(y.terms.count(b) == 1);
}

TEST_CASE("exact division of Laurent polynomials") {
    LaurentPoly q2m1 = lp({{2, 1}, {0, -1}});
    LaurentPoly qm1 = lp({{1, 1}, {0, -1}});
    CHECK(divide_exact(q2m1, qm1) == lp({{1, 1}, {0, 1}}));

    // Division by a q-power is an exponent shift.
    CHECK(divide_exact(qm1, LaurentPoly::q_power(-2)) == lp({{3, 1}, {2, -1}}));

    // a = b * c implies a / b = c for random triples.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly b = random_poly(rng), c = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(divide_exact(b * c, b) == c);
    }
}

TEST_CASE("rank of small matrices") {
    PolyMatrix ident;
    ident.rows = {{lp({{0, 1}}), {}, {}},
                  {{}, lp({{0, 1}}), {}},
                  {{}, {}, lp({{0, 1}})}};
    CHECK(rank(ident) == 3);

    PolyMatrix prop;
    prop.rows = {{lp({{1, 1}}), lp({{0, 1}})},
                 {lp({{2, 1}}), lp({{1, 1}})}};
    CHECK(rank(prop) == 1);

    PolyMatrix zero;
    zero.rows = {{LaurentPoly(), LaurentPoly()}};
    CHECK(rank(zero) == 0);

    PolyMatrix mixed;
    mixed.rows = {{lp({{-1, 1}}), lp({{0, 1}})},
                  {lp({{0, 1}}), lp({{1, 2}})}};
    CHECK(rank(mixed) == 2);
}

TEST_CASE("rank invariances on random matrices") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> shift(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        PolyMatrix m;
        m.rows.assign(4, std::vector<LaurentPoly>(5));
        for (auto& row : m.rows)
            for (auto& e : row) e = random_poly(rng);
        int r = rank(m);
        CHECK(r <= 4);

        // q-power row scaling.
        PolyMatrix scaled = m;
        for (auto& row : scaled.rows) {
            int s = shift(rng);
            for (auto& e : row) e = e.shifted(s);
        }
        CHECK(rank(scaled) == r);

        // Row permutation.
        PolyMatrix perm = m;
        std::shuffle(perm.rows.begin(), perm.rows.end(), rng);
        CHECK(rank(perm) == r);

        // Appending a linear combination of rows cannot raise the rank.
        PolyMatrix extended = m;
        std::vector<LaurentPoly> combo(5);
        for (size_t j = 0; j < 5; ++j)
            combo[j] = m.rows[0][j] * lp({{1, 1}}) + m.rows[1][j];
        extended.rows.push_back(combo);
        CHECK(rank(extended) == r);
    }
}

TEST_CASE("independence of combinations") {
    LinComb one, gs, qgs;
    one.add({}, lp({{0, 1}}));
    gs.add({0}, lp({{0, 1}}));
    qgs.add({0}, lp({{1, 1}}));
    CHECK(check_independent({one, gs}));
    CHECK(!check_independent({gs, qgs}));
    CHECK(!check_independent({one, gs, one + gs}));
}
