#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chebpi/bigint.hpp"
#include "chebpi/pi_engines.hpp"
#include "chebpi/radicals.hpp"
#include "oracles.hpp"

using namespace chebpi;

TEST_CASE("first term is sqrt(2) and halves to cos(pi/4)") {
    const int fb = 128;
    RadicalSequence seq = generate_radicals(1, fb);
    REQUIRE(seq.values.size() == 1);
    CHECK(seq.values[0].mantissa() ==
          oracles::isqrt_binary(BigInt(2) << static_cast<std::size_t>(2 * fb)));

    // a_1 / 2 = cos(pi/4) = 0.70710678... within 1 ulp
    const int wfb = 2 * fb;
    BigFixed angle = machin_pi(wfb).div_pow2(2);
    BigFixed cos_val = oracles::cos_taylor(angle).to_precision(fb);
    BigFixed half = seq.values[0].div_pow2(1);
    CHECK((half - cos_val).abs().mantissa() <= BigInt(1));
    CHECK(half.to_decimal(8) == "0.70710678");
}

TEST_CASE("second term") {
    RadicalSequence seq = generate_radicals(2, 128);
    CHECK(seq.values[1].to_decimal(8) == "1.84775906");
}

TEST_CASE("strictly increasing below two") {
    const int fb = 256;
    RadicalSequence seq = generate_radicals(40, fb);
    const BigFixed two = BigFixed::from_int(2, fb);
    for (std::size_t m = 0; m < seq.values.size(); ++m) {
        CHECK(seq.values[m] < two);
        if (m > 0) CHECK(seq.values[m - 1] < seq.values[m]);
    }
    // and still non-decreasing at a precision coarse enough for the tail
    // values to collide within floor rounding
    RadicalSequence coarse = generate_radicals(40, 64);
    for (std::size_t m = 1; m < coarse.values.size(); ++m)
        CHECK(coarse.values[m - 1] <= coarse.values[m]);
}

TEST_CASE("the halved terms identify with cosines of bisected angles") {
    // |a_m/2 - cos(pi/2^(m+1))| <= (m+4) ulp, m <= 20
    const int fb = 128;
    const int wfb = 2 * fb;
    RadicalSequence seq = generate_radicals(20, fb);
    BigFixed pi_wide = machin_pi(wfb);
    for (int m = 1; m <= 20; ++m) {
        BigFixed angle = pi_wide.div_pow2(m + 1);
        BigFixed cos_val = oracles::cos_taylor(angle).to_precision(fb);
        BigFixed half = seq.values[static_cast<std::size_t>(m - 1)].div_pow2(1);
        CHECK((half - cos_val).abs().mantissa() <= BigInt(m + 4));
    }
}

TEST_CASE("quadratic approach to two") {
    // (2 - a_m) / (pi / 2^(m+1))^2 -> 1
    const int fb = 256;
    RadicalSequence seq = generate_radicals(30, fb);
    const BigFixed two = BigFixed::from_int(2, fb);
    for (int m = 10; m <= 25; ++m) {
        double gap = (two - seq.values[static_cast<std::size_t>(m - 1)]).to_double();
        double theta = M_PI / std::ldexp(1.0, m + 1);
        double ratio = gap / (theta * theta);
        CHECK(ratio > 0.99);
        CHECK(ratio < 1.01);
    }
    double gap30 = (two - seq.values[29]).to_double();
    double theta30 = M_PI / std::ldexp(1.0, 31);
    CHECK(gap30 > 0.9 * theta30 * theta30);
    CHECK(gap30 < 1.1 * theta30 * theta30);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(generate_radicals(0, 64), std::invalid_argument);
    CHECK_THROWS_AS(generate_radicals(-2, 64), std::invalid_argument);
    CHECK_THROWS_AS(generate_radicals(3, 15), std::invalid_argument);
    CHECK(generate_radicals(3, 16).values.size() == 3);
}
