/*
 * lincomb.hpp
 * -----------
 * Sparse linear combinations over canonical word keys, and exact rank
 * of matrices with Laurent polynomial entries.
 *
 * LinComb is the shared container underneath Hecke and Temperley-Lieb
 * elements: a normalized map from canonical words to coefficients in
 * Z[q, q^{-1}]. Rank is computed by fraction-free Bareiss elimination
 * after clearing negative exponents row by row (a q-power row scaling,
 * which cannot change the rank over the fraction field).
 */
#pragma once

#include <map>
#include <vector>

#include "fc/coxeter.hpp"
#include "fc/laurent.hpp"

namespace fc {

struct LinComb {
    // canonical word -> coefficient, zero coefficients never stored
    std::map<Word, LaurentPoly> terms;

    bool is_zero() const { return terms.empty(); }

    // Adds c * key, dropping the entry if the sum vanishes.
    void add(const Word& key, const LaurentPoly& c);

    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    LinComb& operator+=(const LinComb& o);
    LinComb scaled(const LaurentPoly& c) const;

    bool operator==(const LinComb& o) const { return terms == o.terms; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }
};

struct PolyMatrix {
    std::vector<std::vector<LaurentPoly>> rows; // rectangular

    size_t row_count() const { return rows.size(); }
    size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

// Exact division a / b in Z[q, q^{-1}]; the quotient must be exact.
// Used by the Bareiss elimination, where exactness is guaranteed.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Rank over the fraction field Q(q), computed exactly.
int rank(const PolyMatrix& m);

// Assembles the coefficient matrix of the given combinations over the
// union of their keys and returns true iff the rank equals the number
// of combinations.
bool check_independent(const std::vector<LinComb>& elements);

} // namespace fc
