#pragma once

// Independent reference implementations used only by the test suite.
// None of these share an algorithm with the production path they check.

#include "chebpi/bigfixed.hpp"
#include "chebpi/bigint.hpp"

namespace chebpi::oracles {

// Exact rational number over BigInt; denominator kept positive, no
// reduction (test chains are shallow enough that growth is harmless).
struct Rat {
    BigInt num;
    BigInt den;

    Rat() : num(0), den(1) {}
    Rat(BigInt n, BigInt d);
    static Rat of_int(std::int64_t v) { return Rat(BigInt(v), BigInt(1)); }
    static Rat of(const BigFixed& x) {
        return Rat(x.mantissa(), BigInt::pow2(static_cast<std::size_t>(x.frac_bits())));
    }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }

    bool operator==(const Rat& o) const { return num * o.den == o.num * den; }

    // floor(value * 2^frac_bits): the mantissa an exactly rounding
    // fixed-point operation must produce.
    BigInt floor_mantissa(int frac_bits) const;
    double to_double() const { return num.to_double() / den.to_double(); }
};

// Digit-by-digit (base 4) integer square root; shares nothing with the
// Newton iteration in the library.
BigInt isqrt_binary(const BigInt& n);

// Schoolbook shift-subtract division, truncated quotient.
void divmod_binary(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);

// cos(x) by the plain Taylor series over BigFixed, |x| <= 1. Accurate to a
// few ulp at x's precision; run it with doubled frac_bits and floor down
// when ulp-level comparisons are needed.
BigFixed cos_taylor(const BigFixed& x);

// pi from a series pair unrelated to the Machin 1/5, 1/239 split:
// 4*(atan(1/2) + atan(1/3)), each by brute-force alternating Taylor sums
// in long double. Good to ~18 digits.
long double pi_second_series();

} // namespace chebpi::oracles
