#include "chebpi/sinc_approx.hpp"

#include <cmath>
#include <stdexcept>

#include "chebpi/chebyshev.hpp"
#include "chebpi/errors.hpp"

namespace chebpi {

namespace {
constexpr int kCosSumCap = 26;
}

double sinc_exact(double t) {
    if (std::fabs(t) < 1e-8) return 1.0 - t * t / 6.0;
    return std::sin(t) / t;
}

double sinc_cos_product(double t, int factors) {
    if (factors < 1) throw std::invalid_argument("sinc: need at least one factor");
    double p = 1.0;
    for (int m = 1; m <= factors; ++m) p *= std::cos(std::ldexp(t, -m));
    return p;
}

double sinc_cos_sum(double t, int half_levels) {
    if (half_levels < 1) throw std::invalid_argument("sinc: need at least one level");
    if (half_levels > kCosSumCap)
        throw cap_exceeded("sinc: cosine expansion capped at M = " +
                           std::to_string(kCosSumCap));
    const long count = 1L << (half_levels - 1);
    const double scale = std::ldexp(t, -half_levels); // t / 2^M
    double sum = 0.0;
    for (long m = 1; m <= count; ++m)
        sum += std::cos(static_cast<double>(2 * m - 1) * scale);
    return sum / static_cast<double>(count);
}

// The two polynomial forms run their shared recurrence passes in long
// double: near x = cos(small angle) ~ 1 the derivative of a degree-k
// polynomial reaches k^2, so plain double input rounding alone would cost
// ~1e-11 at degree 1023 and swamp the 1e-12 identity budget.
double sinc_t_sum(double t, long terms) {
    if (terms < 1) throw std::invalid_argument("sinc: need at least one term");
    const long double half = static_cast<long double>(t) / (2.0L * static_cast<long double>(terms));
    const long double x = std::cos(half);
    const long double doubled = sum_odd_t(2 * terms - 1, x); // 2 * sum of odd T
    return static_cast<double>(doubled / (2.0L * static_cast<long double>(terms)));
}

double sinc_u(double t, long degree_plus_one) {
    if (degree_plus_one < 1) throw std::invalid_argument("sinc: need degree >= 0");
    const auto n = static_cast<long double>(degree_plus_one);
    const long double x = std::cos(static_cast<long double>(t) / n);
    return static_cast<double>(eval_u_recurrence(degree_plus_one - 1, x) / n);
}

SincErrorReport measure_sup_error(SincMethod method, long parameter, double t_lo,
                                  double t_hi, long grid_points) {
    if (grid_points < 2) throw std::invalid_argument("sinc: grid needs at least 2 points");
    if (!(t_lo < t_hi)) throw std::invalid_argument("sinc: range must satisfy t_lo < t_hi");
    if (parameter < 1) throw std::invalid_argument("sinc: parameter must be >= 1");
    if (method == SincMethod::CosSum && parameter > kCosSumCap)
        throw cap_exceeded("sinc: cosine expansion capped at M = " +
                           std::to_string(kCosSumCap));
    if (method == SincMethod::CosProduct && parameter > 1000000)
        throw std::invalid_argument("sinc: implausible factor count");

    SincErrorReport rep;
    rep.method = method;
    rep.parameter = parameter;
    rep.t_lo = t_lo;
    rep.t_hi = t_hi;
    rep.grid_points = grid_points;
    rep.argmax_t = t_lo;

    const double span = t_hi - t_lo;
    const auto denom = static_cast<double>(grid_points - 1);
    for (long i = 0; i < grid_points; ++i) {
        const double t = t_lo + span * static_cast<double>(i) / denom;
        double approx = 0.0;
        switch (method) {
        case SincMethod::CosProduct:
            approx = sinc_cos_product(t, static_cast<int>(parameter));
            break;
        case SincMethod::CosSum:
            approx = sinc_cos_sum(t, static_cast<int>(parameter));
            break;
        case SincMethod::TSum:
            approx = sinc_t_sum(t, parameter);
            break;
        case SincMethod::USingle:
            approx = sinc_u(t, parameter);
            break;
        }
        const double err = std::fabs(approx - sinc_exact(t));
        if (err > rep.sup_error) {
            rep.sup_error = err;
            rep.argmax_t = t;
        }
    }
    return rep;
}

const char* sinc_method_name(SincMethod method) {
    switch (method) {
    case SincMethod::CosProduct: return "product";
    case SincMethod::CosSum: return "cos-sum";
    case SincMethod::TSum: return "t-sum";
    case SincMethod::USingle: return "u";
    }
    return "unknown";
}

} // namespace chebpi
