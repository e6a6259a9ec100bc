/*
 * bigint.hpp
 * ----------
 * Arbitrary-precision signed integers.
 *
 * Coefficients of Laurent polynomials can grow without bound during
 * fraction-free elimination, so a fixed-width integer type is not safe.
 * This is a plain sign/magnitude implementation (base 2^32 limbs) with
 * the handful of operations the rest of the library needs: ring
 * arithmetic, comparison, gcd, and exact division for content removal.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fc {

class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    // Quotient and remainder truncated toward zero; divisor must be nonzero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // Division known to be exact; asserts a zero remainder.
    BigInt div_exact(const BigInt& d) const;

    static BigInt gcd(BigInt a, BigInt b);

    std::string to_string() const;

    // Value as long long; asserts that the value fits.
    long long to_ll() const;

private:
    int sign_;                    // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian limbs, no leading zeros, empty iff zero

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

} // namespace fc
