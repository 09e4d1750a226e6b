#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chebpi {

// Sign-magnitude arbitrary-precision integer over little-endian 32-bit limbs.
// Canonical form: no high zero limbs; zero is { limbs empty, sign 0 }, so
// there is no negative zero and operator== on members is value equality.
//
// operator>> is an arithmetic shift (rounds toward -infinity); operator/ and
// operator% truncate toward zero with the remainder taking the dividend's
// sign. floor_div rounds the quotient toward -infinity.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_decimal(std::string_view s);
    static BigInt pow2(std::size_t k);
    static BigInt pow10(std::size_t k);

    // floor(sqrt(n)) by Newton iteration; the seed comes from the top bits
    // of n and the iteration stops when the candidate stops decreasing.
    static BigInt isqrt(const BigInt& n);

    static void div_mod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return sign_; }
    std::size_t bit_length() const; // 0 for zero
    BigInt abs() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs) { *this = *this * rhs; return *this; }
    BigInt& operator<<=(std::size_t bits);
    BigInt& operator>>=(std::size_t bits);

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    friend BigInt operator<<(BigInt a, std::size_t b) { a <<= b; return a; }
    friend BigInt operator>>(BigInt a, std::size_t b) { a >>= b; return a; }

    bool operator==(const BigInt&) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    std::string to_decimal() const;
    double to_double() const;
    // Low 64 bits of the magnitude.
    std::uint64_t low_u64() const;

private:
    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);

    std::vector<std::uint32_t> limbs_;
    int sign_ = 0;
};

// Quotient rounded toward -infinity.
BigInt floor_div(const BigInt& a, const BigInt& b);

} // namespace chebpi
