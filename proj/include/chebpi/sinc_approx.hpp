#pragma once

namespace chebpi {

enum class SincMethod { CosProduct, CosSum, TSum, USingle };

// Sup-norm deviation of one approximation from sinc over a uniform closed
// grid; argmax_t is the smallest grid point attaining the maximum.
struct SincErrorReport {
    SincMethod method = SincMethod::CosProduct;
    long parameter = 0; // M, L or N depending on the method
    double t_lo = 0.0;
    double t_hi = 0.0;
    long grid_points = 0;
    double sup_error = 0.0;
    double argmax_t = 0.0;
};

// sin(t)/t with the removable singularity filled in; below |t| = 1e-8 the
// two-term Taylor expansion 1 - t^2/6 avoids cancellation noise.
double sinc_exact(double t);

// Truncated cosine product prod_{m<=M} cos(t/2^m). M >= 1.
double sinc_cos_product(double t, int factors);

// Incomplete cosine expansion (1/2^(M-1)) sum_{m<=2^(M-1)} cos((2m-1)t/2^M).
// M is capped at 26 (2^(M-1) summands).
double sinc_cos_sum(double t, int half_levels);

// (1/L) sum_{l<=L} T_{2l-1}(cos(t/(2L))) with one shared recurrence pass
// up to degree 2L-1. L >= 1.
double sinc_t_sum(double t, long terms);

// (1/N) U_{N-1}(cos(t/N)). N >= 1.
double sinc_u(double t, long degree_plus_one);

// Max |approx - sinc| over grid_points uniformly spaced samples of
// [t_lo, t_hi], endpoints included; ties resolve to the smallest t.
// Deterministic for fixed inputs.
SincErrorReport measure_sup_error(SincMethod method, long parameter, double t_lo,
                                  double t_hi, long grid_points);

const char* sinc_method_name(SincMethod method);

} // namespace chebpi
