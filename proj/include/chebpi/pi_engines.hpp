#pragma once

#include <string>
#include <vector>

#include "chebpi/bigfixed.hpp"

namespace chebpi {

enum class PiMethod { VieteProduct, ChebTSum, ChebUSingle, MachinReference };

// One pi estimate with its error against the in-tree Machin reference at
// the same working precision. matched_decimal_digits counts the leading
// decimal digits (integer digit included) shared with the reference.
struct PiApproxReport {
    PiMethod method = PiMethod::VieteProduct;
    int terms = 0; // M for the product/sum engines, series terms for Machin
    int frac_bits = 1;
    BigFixed estimate;
    BigFixed abs_error;
    BigFixed rel_error;
    int matched_decimal_digits = 0;
};

// pi = 2 / prod_{m<=M} (a_m / 2) over the nested radicals; O(M) bigfix
// operations. Requires frac_bits >= 64.
PiApproxReport pi_viete_product(int terms, int frac_bits);

// pi via the odd Chebyshev-T sum evaluated at a_M / 2: all 2^(M-1) odd
// degrees come out of one shared recurrence pass up to degree 2^M - 1, so
// the cost is O(2^M) rather than O(4^M). M is capped at 24.
PiApproxReport pi_cheb_t_sum(int terms, int frac_bits);

// pi via the single second-kind polynomial U_{2^M-1}(a_M / 2) / 2^M.
// Same O(2^M) cost and the same M <= 24 cap.
PiApproxReport pi_cheb_u(int terms, int frac_bits);

// Independent reference: pi = 16 atan(1/5) - 4 atan(1/239) by alternating
// Taylor series at ceil(digits*log2(10)) + 64 fractional bits; the series
// stops when a term underflows the working precision. The first `digits`
// decimals of the estimate are correct.
PiApproxReport pi_machin_reference(int digits);

// One report per M in [m_lo, m_hi], ordered by M. MachinReference is not
// sweepable (it is parameterized by digits, not terms).
std::vector<PiApproxReport> convergence_sweep(PiMethod method, int m_lo, int m_hi,
                                              int frac_bits);

// pi at the given precision, accurate to about 1 ulp (Machin series with
// 32 internal guard bits). This is the reference all reports compare to.
BigFixed machin_pi(int frac_bits);

// Term count and precision to produce `digits` correct decimals via the
// product engine: M = ceil(1.661*digits + 4) and
// frac_bits = ceil(digits*log2(10)) + ceil(log2(M)) + 32 guard bits,
// covering up to M ulp of radical drift plus M product roundings.
struct VieteSizing {
    int terms;
    int frac_bits;
};
VieteSizing viete_sizing(int digits);

// Leading decimal digits (skipping sign and point) shared by a and b when
// both are rendered at the full precision their frac_bits justify.
int count_matched_digits(const BigFixed& a, const BigFixed& b);

const char* pi_method_name(PiMethod method);

} // namespace chebpi
