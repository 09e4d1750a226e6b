#pragma once

#include <vector>

#include "chebpi/bigfixed.hpp"

namespace chebpi {

// The nested-radical values a_1 = sqrt(2), a_m = sqrt(2 + a_{m-1}), all at
// one working precision. Each a_m lies in (1, 2), the sequence increases
// toward 2, and a_m / 2 equals cos(pi / 2^(m+1)) up to the accumulated
// floor-rounding of the square roots.
struct RadicalSequence {
    int frac_bits;
    std::vector<BigFixed> values; // a_1 .. a_M
};

// M square roots at frac_bits; per-step rounding is at most 1 ulp, so the
// total drift of a_M stays below M ulp. Callers size guard bits from that
// bound. Requires M >= 1 and frac_bits >= 16.
RadicalSequence generate_radicals(int terms, int frac_bits);

} // namespace chebpi
