#pragma once

#include <stdexcept>
#include <string>

namespace chebpi {

// Two BigFixed operands with different frac_bits met in one operation.
struct precision_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A malformed numeric literal was passed to a parser.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A hard engine limit was violated (term-count caps, degree caps,
// minimum working precision). CLI maps this to exit code 3.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace chebpi
