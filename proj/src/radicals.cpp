#include "chebpi/radicals.hpp"

#include <stdexcept>

namespace chebpi {

RadicalSequence generate_radicals(int terms, int frac_bits) {
    if (terms < 1) throw std::invalid_argument("radicals: need at least one term");
    if (frac_bits < 16) throw std::invalid_argument("radicals: frac_bits must be >= 16");
    RadicalSequence seq{frac_bits, {}};
    seq.values.reserve(static_cast<std::size_t>(terms));
    const BigFixed two = BigFixed::from_int(2, frac_bits);
    BigFixed a = sqrt(two);
    seq.values.push_back(a);
    for (int m = 2; m <= terms; ++m) {
        a = sqrt(two + a);
        seq.values.push_back(a);
    }
    return seq;
}

} // namespace chebpi
