// Acceptance gate: every release-blocking requirement as one checked
// criterion with a PASS/FAIL line. Exit status is the failure count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "chebpi/bigfixed.hpp"
#include "chebpi/bigint.hpp"
#include "chebpi/chebyshev.hpp"
#include "chebpi/pi_engines.hpp"
#include "chebpi/radicals.hpp"
#include "chebpi/sinc_approx.hpp"
#include "oracles.hpp"

using namespace chebpi;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const char* title, bool ok, double elapsed_s) {
    std::printf("%s: criterion %d (%s) [%.2fs]\n", ok ? "PASS" : "FAIL", number, title,
                elapsed_s);
    if (!ok) ++g_failures;
}

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string("'") + CHEBPI_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

// 1. The degree-15 single-U approximation stays within 0.006 of sinc over
//    [-10, 10] on a 100001-point grid, in under a second.
void criterion_1() {
    const auto t0 = Clock::now();
    SincErrorReport rep = measure_sup_error(SincMethod::USingle, 16, -10.0, 10.0, 100001);
    const double elapsed = seconds_since(t0);
    const bool ok = rep.sup_error < 0.006 && elapsed < 1.0;
    report(1, "degree-15 U bound on [-10,10]", ok, elapsed);
    if (rep.sup_error >= 0.006)
        std::printf("  sup_error = %.17g at t = %.17g\n", rep.sup_error, rep.argmax_t);
}

// 2. U_15 coefficients divided by 16 equal the expected odd-degree integer
//    pattern with all even-degree entries zero.
void criterion_2() {
    const auto t0 = Clock::now();
    const long expected[8] = {2048, -7168, 9984, -7040, 2640, -504, 42, -1};
    ChebCoeffVector u15 = cheb_coeffs(ChebKind::SecondKind, 15);
    bool ok = u15.coeffs.size() == 16;
    const BigInt sixteen(16);
    for (int i = 0; ok && i < 8; ++i) {
        const long degree = 15 - 2 * i;
        BigInt q, r;
        BigInt::div_mod(u15.coeffs[static_cast<std::size_t>(degree)], sixteen, q, r);
        ok = r.is_zero() && q == BigInt(expected[i]);
    }
    for (long degree = 0; ok && degree <= 14; degree += 2)
        ok = u15.coeffs[static_cast<std::size_t>(degree)].is_zero();
    report(2, "degree-15 U coefficients over 16", ok, seconds_since(t0));
}

// 3. Identity suite: trig defining property, product-to-sum, odd-T sum and
//    the U collapse all hold to 1e-12 on their grids, and the CLI gate
//    command exits 0. Under ten seconds.
void criterion_3() {
    const auto t0 = Clock::now();
    double worst = 0.0;

    for (int i = 0; i < 1000; ++i) {
        const double th = M_PI * i / 999.0;
        const double x = std::cos(th);
        double prev = 1.0, cur = x;
        for (int m = 2; m <= 64; ++m) {
            const double next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
            worst = std::max(worst, std::fabs(cur - std::cos(m * th)));
        }
    }
    const double trig_worst = worst;

    const auto grid_t = [](int i) { return -20.0 + 40.0 * i / 1000.0; };
    double prod_sum_worst = 0.0, sum_t_worst = 0.0, t_u_worst = 0.0;
    for (int m = 1; m <= 12; ++m)
        for (int i = 0; i <= 1000; ++i) {
            const double t = grid_t(i);
            prod_sum_worst = std::max(
                prod_sum_worst, std::fabs(sinc_cos_product(t, m) - sinc_cos_sum(t, m)));
        }
    for (int m = 1; m <= 10; ++m) {
        const long l = 1L << (m - 1);
        for (int i = 0; i <= 1000; ++i) {
            const double t = grid_t(i);
            sum_t_worst =
                std::max(sum_t_worst, std::fabs(sinc_cos_sum(t, m) - sinc_t_sum(t, l)));
        }
    }
    for (long l = 1; l <= 512; ++l)
        for (int i = 0; i <= 1000; ++i) {
            const double t = grid_t(i);
            t_u_worst = std::max(t_u_worst, std::fabs(sinc_t_sum(t, l) - sinc_u(t, 2 * l)));
        }

    const CliRun gate = run_cli("identity-check --max-m 10 --no-timing");
    const double elapsed = seconds_since(t0);
    const bool ok = trig_worst < 1e-12 && prod_sum_worst < 1e-12 && sum_t_worst < 1e-12 &&
                    t_u_worst < 1e-12 && gate.exit_code == 0 && elapsed < 10.0;
    report(3, "identity suite at 1e-12", ok, elapsed);
    if (!ok)
        std::printf("  trig %.3g, prod/sum %.3g, sum/T %.3g, T/U %.3g, gate exit %d\n",
                    trig_worst, prod_sum_worst, sum_t_worst, t_u_worst, gate.exit_code);
}

// 4. The three engines agree pairwise within 2^-200 at 256 fractional bits
//    for every M <= 16, in under thirty seconds.
void criterion_4() {
    const auto t0 = Clock::now();
    const BigInt budget = BigInt::pow2(56);
    bool ok = true;
    for (int m = 1; m <= 16 && ok; ++m) {
        const BigFixed v = pi_viete_product(m, 256).estimate;
        const BigFixed t = pi_cheb_t_sum(m, 256).estimate;
        const BigFixed u = pi_cheb_u(m, 256).estimate;
        ok = (v - t).abs().mantissa() <= budget && (t - u).abs().mantissa() <= budget &&
             (v - u).abs().mantissa() <= budget;
        if (!ok) std::printf("  disagreement at M = %d\n", m);
    }
    const double elapsed = seconds_since(t0);
    report(4, "cross-engine agreement within 2^-200", ok && elapsed < 30.0, elapsed);
}

// 5. Product-engine convergence follows pi^2 / (6*4^(M+1)): the measured
//    over modeled ratio sits in [0.99, 1.01] for 5 <= M <= 20 and the
//    error contracts by 3.96x to 4.04x per step.
void criterion_5() {
    const auto t0 = Clock::now();
    bool ok = true;
    double prev_rel = 0.0;
    for (int m = 5; m <= 20; ++m) {
        const double rel = pi_viete_product(m, 256).rel_error.to_double();
        const double model = M_PI * M_PI / (6.0 * std::ldexp(1.0, 2 * (m + 1)));
        const double ratio = rel / model;
        if (!(ratio > 0.99 && ratio < 1.01)) {
            std::printf("  model ratio %.6f at M = %d\n", ratio, m);
            ok = false;
        }
        if (m > 5) {
            const double contraction = prev_rel / rel;
            if (!(contraction > 3.96 && contraction < 4.04)) {
                std::printf("  contraction %.6f at M = %d\n", contraction, m);
                ok = false;
            }
        }
        prev_rel = rel;
    }
    report(5, "convergence law of the product engine", ok, seconds_since(t0));
}

// 6. The CLI produces 1000 correct decimals through the product engine in
//    under a minute, digit-for-digit equal to the Machin reference.
void criterion_6() {
    const auto t0 = Clock::now();
    const CliRun run = run_cli("pi --method viete --digits 1000 --raw --no-timing");
    const std::string produced = first_line(run.out);
    const std::string expected = pi_machin_reference(1000).estimate.to_decimal(1000);
    const double elapsed = seconds_since(t0);
    const bool ok = run.exit_code == 0 && produced == expected && elapsed < 60.0;
    report(6, "1000 digits via the CLI product engine", ok, elapsed);
    if (produced != expected) {
        const auto diff = std::mismatch(produced.begin(), produced.end(), expected.begin(),
                                        expected.end());
        std::printf("  first divergence around char %ld\n",
                    static_cast<long>(diff.first - produced.begin()));
    }
}

// 7. sqrt postcondition r^2 <= a < (r+1 ulp)^2 over 1000 random operands at
//    64/256/1024 fractional bits, and sqrt(2) at 64 bits equals the
//    digit-by-digit oracle exactly.
void criterion_7() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(0x5EED);
    bool ok = true;
    for (int fb : {64, 256, 1024}) {
        for (int i = 0; i < 1000 && ok; ++i) {
            std::uniform_int_distribution<std::size_t> bits_dist(
                0, 2 * static_cast<std::size_t>(fb) + 16);
            const std::size_t bits = bits_dist(rng);
            BigInt m;
            for (std::size_t made = 0; made < bits; made += 32) {
                m <<= 32;
                m += BigInt(static_cast<std::int64_t>(static_cast<std::uint32_t>(rng())));
            }
            if (bits % 32) m >>= 32 - bits % 32;
            const BigFixed a(m, fb);
            const BigInt r = sqrt(a).mantissa();
            const BigInt scaled = a.mantissa() << static_cast<std::size_t>(fb);
            const BigInt rp = r + BigInt(1);
            ok = r * r <= scaled && scaled < rp * rp;
            if (!ok) std::printf("  postcondition violated at frac_bits %d\n", fb);
        }
    }
    const BigFixed root2 = sqrt(BigFixed::from_int(2, 64));
    if (root2.mantissa() != oracles::isqrt_binary(BigInt::pow2(129))) {
        std::printf("  sqrt(2) mantissa differs from the oracle\n");
        ok = false;
    }
    if (root2.mantissa() != BigInt::from_decimal("26087635650665564424")) {
        std::printf("  sqrt(2) mantissa differs from the frozen value\n");
        ok = false;
    }
    report(7, "sqrt contract and oracle agreement", ok, seconds_since(t0));
}

// 8. The Machin reference reproduces the embedded 50-digit value, and that
//    value is itself re-verified to 15 digits by a series pair that shares
//    nothing with the 1/5, 1/239 split.
void criterion_8() {
    const auto t0 = Clock::now();
    const std::string literal = "3.14159265358979323846264338327950288419716939937510";
    bool ok = pi_machin_reference(50).estimate.to_decimal(50) == literal;
    char second[32];
    std::snprintf(second, sizeof second, "%.14Lf", oracles::pi_second_series());
    ok = ok && literal.compare(0, 16, second) == 0;
    report(8, "oracle independence", ok, seconds_since(t0));
    if (literal.compare(0, 16, second) != 0)
        std::printf("  second series gave %s\n", second);
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("%d of 8 criteria passed in %.2fs\n", 8 - g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
