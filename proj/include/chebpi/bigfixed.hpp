#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "chebpi/bigint.hpp"

namespace chebpi {

// Fixed-point real: mantissa / 2^frac_bits, frac_bits >= 1.
//
// Additive operations are exact. mul, div, sqrt and div_pow2 round toward
// -infinity and are off by at most one unit in the last place. Operands of
// one arithmetic operation must carry equal frac_bits; mixing precisions
// throws precision_mismatch instead of rescaling silently. Values are
// immutable and safe to share across threads.
class BigFixed {
public:
    BigFixed() : frac_bits_(1) {}
    BigFixed(BigInt mantissa, int frac_bits);

    static BigFixed from_int(std::int64_t v, int frac_bits); // exact
    static BigFixed from_decimal(std::string_view s, int frac_bits);
    // Exact when frac_bits suffice for the dyadic value, else floored.
    static BigFixed from_double(double v, int frac_bits);
    // One unit in the last place at the given precision, 2^-frac_bits.
    static BigFixed ulp(int frac_bits);

    const BigInt& mantissa() const { return mant_; }
    int frac_bits() const { return frac_bits_; }
    int sign() const { return mant_.sign(); }
    bool is_zero() const { return mant_.is_zero(); }

    BigFixed operator-() const { return BigFixed(-mant_, frac_bits_); }
    BigFixed abs() const { return BigFixed(mant_.abs(), frac_bits_); }
    // Value * 2^k (exact) and value / 2^k (floor).
    BigFixed mul_pow2(int k) const;
    BigFixed div_pow2(int k) const;
    // Explicit precision conversion; shrinking floors the value onto the
    // coarser grid, widening is exact.
    BigFixed to_precision(int frac_bits) const;

    friend BigFixed operator+(const BigFixed& a, const BigFixed& b);
    friend BigFixed operator-(const BigFixed& a, const BigFixed& b);
    friend BigFixed operator*(const BigFixed& a, const BigFixed& b);
    friend BigFixed operator/(const BigFixed& a, const BigFixed& b);
    friend BigFixed sqrt(const BigFixed& a);

    bool operator==(const BigFixed& rhs) const;
    std::strong_ordering operator<=>(const BigFixed& rhs) const;

    // Truncates toward zero; `digits` fractional decimal digits, which must
    // not exceed what the precision justifies (floor(frac_bits*log10(2))).
    std::string to_decimal(int digits) const;
    // "d.dd...de[+-]XX" with sig_digits significant digits, truncated.
    std::string to_scientific(int sig_digits) const;
    double to_double() const;

    // Largest fractional digit count to_decimal accepts at this precision.
    static int max_decimal_digits(int frac_bits);

private:
    static void check_same_precision(const BigFixed& a, const BigFixed& b);

    BigInt mant_;
    int frac_bits_;
};

} // namespace chebpi
