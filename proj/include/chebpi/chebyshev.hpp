#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "chebpi/bigfixed.hpp"
#include "chebpi/bigint.hpp"
#include "chebpi/errors.hpp"

namespace chebpi {

// Number abstraction for the polynomial evaluators: the type must provide
// +, -, * and the constants below. Hardware floating point and BigFixed
// both qualify; BigFixed constants are minted at the precision of the
// evaluation point.
template <class T>
struct num_traits;

template <>
struct num_traits<double> {
    static double one(const double&) { return 1.0; }
    static double two(const double&) { return 2.0; }
    static bool is_zero(const double& x) { return x == 0.0; }
    static double from_bigint(const double&, const BigInt& v) { return v.to_double(); }
};

template <>
struct num_traits<long double> {
    static long double one(const long double&) { return 1.0L; }
    static long double two(const long double&) { return 2.0L; }
    static bool is_zero(const long double& x) { return x == 0.0L; }
    static long double from_bigint(const long double&, const BigInt& v) {
        return static_cast<long double>(v.to_double());
    }
};

template <>
struct num_traits<BigFixed> {
    static BigFixed one(const BigFixed& like) { return BigFixed::from_int(1, like.frac_bits()); }
    static BigFixed two(const BigFixed& like) { return BigFixed::from_int(2, like.frac_bits()); }
    static bool is_zero(const BigFixed& x) { return x.is_zero(); }
    static BigFixed from_bigint(const BigFixed& like, const BigInt& v) {
        return BigFixed(v << static_cast<std::size_t>(like.frac_bits()), like.frac_bits());
    }
};

// T_m(x) by the three-term recurrence T_m = 2x T_{m-1} - T_{m-2},
// T_0 = 1, T_1 = x.
template <class T>
T eval_t_recurrence(long m, const T& x) {
    if (m < 0) throw std::invalid_argument("chebyshev: negative degree");
    using nt = num_traits<T>;
    if (m == 0) return nt::one(x);
    if (m == 1) return x;
    const T tx = nt::two(x) * x;
    T prev = nt::one(x);
    T cur = x;
    for (long k = 2; k <= m; ++k) {
        T next = tx * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// U_m(x) by the same recurrence with U_0 = 1, U_1 = 2x.
template <class T>
T eval_u_recurrence(long m, const T& x) {
    if (m < 0) throw std::invalid_argument("chebyshev: negative degree");
    using nt = num_traits<T>;
    if (m == 0) return nt::one(x);
    const T tx = nt::two(x) * x;
    if (m == 1) return tx;
    T prev = nt::one(x);
    T cur = tx;
    for (long k = 2; k <= m; ++k) {
        T next = tx * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// 2 * sum of T_k(x) over odd k <= K, accumulated in one shared recurrence
// pass instead of K independent evaluations. K must be odd and positive.
template <class T>
T sum_odd_t(long k_max, const T& x) {
    if (k_max < 1 || k_max % 2 == 0)
        throw std::domain_error("chebyshev: sum_odd_t needs an odd positive degree");
    using nt = num_traits<T>;
    T sum = x; // T_1
    if (k_max > 1) {
        const T tx = nt::two(x) * x;
        T prev = nt::one(x);
        T cur = x;
        for (long k = 2; k <= k_max; ++k) {
            T next = tx * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
            if (k % 2 == 1) sum = sum + cur;
        }
    }
    return nt::two(x) * sum;
}

// Exact integer row m of Pascal's triangle.
std::vector<BigInt> pascal_row(long m);

// T_m(x) by the direct binomial identity x^m * sum C(m,2n) (1 - x^-2)^n.
// The identity divides by x^2, so x = 0 is rejected for m >= 1; use the
// recurrence there instead. The inner factor is computed once and its
// powers accumulated incrementally, with binomials from an exact integer
// Pascal row.
template <class T>
T eval_t_closed_form(long m, const T& x) {
    if (m < 0) throw std::invalid_argument("chebyshev: negative degree");
    using nt = num_traits<T>;
    if (m == 0) return nt::one(x);
    if (nt::is_zero(x))
        throw std::domain_error("chebyshev: closed form is undefined at x = 0");
    const T one = nt::one(x);
    const T w = one - one / (x * x); // 1 - x^-2
    const std::vector<BigInt> row = pascal_row(m);
    T acc = nt::from_bigint(x, row[0]);
    T wpow = one;
    for (long n = 1; n <= m / 2; ++n) {
        wpow = wpow * w;
        acc = acc + nt::from_bigint(x, row[static_cast<std::size_t>(2 * n)]) * wpow;
    }
    // x^m by binary exponentiation
    T xpow = one;
    T base = x;
    long e = m;
    while (e) {
        if (e & 1) xpow = xpow * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return xpow * acc;
}

enum class ChebKind { FirstKind, SecondKind };

// Exact monomial coefficients of T_m or U_m: coeffs[k] multiplies x^k.
// Leading coefficient is 2^(m-1) for T_m (m >= 1) and 2^m for U_m;
// entries of parity opposite to m are zero.
struct ChebCoeffVector {
    ChebKind kind;
    long degree;
    std::vector<BigInt> coeffs;
};

// Integer-coefficient recurrence; degrees above 2^20 are refused because
// the coefficients grow as 2^m.
ChebCoeffVector cheb_coeffs(ChebKind kind, long m);

} // namespace chebpi
