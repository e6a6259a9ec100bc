/*
 * laurent.hpp
 * -----------
 * Integer-coefficient Laurent polynomials in one variable q.
 *
 * This is the coefficient ring of the Hecke and Temperley-Lieb modules.
 * p denotes q^{-1}; division by q is an exponent shift, so the ring is
 * Z[q, q^{-1}]. Representation: sparse map exponent -> coefficient with
 * no zero entries (normalized form), so structural equality is ring
 * equality.
 */
#pragma once

#include <map>
#include <string>

#include "fc/bigint.hpp"

namespace fc {

class LaurentPoly {
public:
    // exponent -> coefficient, zero coefficients never stored
    std::map<int, BigInt> coeffs;

    LaurentPoly() = default;
    explicit LaurentPoly(long long constant);

    // Monomial c * q^e.
    static LaurentPoly monomial(long long c, int e);
    static LaurentPoly q_power(int e) { return monomial(1, e); }
    static LaurentPoly one() { return monomial(1, 0); }

    bool is_zero() const { return coeffs.empty(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return coeffs == o.coeffs; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;

    // Multiply by q^e (exponent shift).
    LaurentPoly shifted(int e) const;

    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero

    // True iff the polynomial is a single term +q^e for some e.
    bool is_q_power() const;

    // Positive gcd of all coefficients; zero polynomial has content 0.
    BigInt content() const;

    // Divide every coefficient exactly by d.
    LaurentPoly div_coeff(const BigInt& d) const;

    // Substitute q = 1.
    BigInt eval_at_one() const;

    std::string to_string() const;

private:
    void prune(int e);
};

} // namespace fc
