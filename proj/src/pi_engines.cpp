#include "chebpi/pi_engines.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "chebpi/chebyshev.hpp"
#include "chebpi/errors.hpp"
#include "chebpi/radicals.hpp"

namespace chebpi {

namespace {

constexpr int kChebTermCap = 24;
constexpr int kVieteMinFracBits = 64;
constexpr double kLog2Of10 = 3.32192809488736234787;

struct ArctanResult {
    BigInt mantissa; // atan(1/q) * 2^frac_bits, floored
    int terms;
};

// Alternating Taylor series for atan(1/q), integer q >= 2, over scaled
// integers. Truncates when the running power underflows the precision;
// each floor division is off by at most 1 ulp and the drift stays bounded
// because every step divides the previous error by q^2.
ArctanResult arctan_reciprocal(std::uint32_t q, int frac_bits) {
    const auto q2 = BigInt(static_cast<std::int64_t>(q) * q);
    BigInt cur = BigInt::pow2(static_cast<std::size_t>(frac_bits)) / BigInt(q);
    BigInt acc;
    int k = 0;
    while (!cur.is_zero()) {
        BigInt term = cur / BigInt(2 * k + 1);
        if (k % 2 == 0) acc += term;
        else acc -= term;
        cur = cur / q2;
        ++k;
    }
    return {std::move(acc), k};
}

struct MachinResult {
    BigFixed value;
    int terms;
};

MachinResult machin_pi_terms(int frac_bits) {
    ArctanResult a5 = arctan_reciprocal(5, frac_bits);
    ArctanResult a239 = arctan_reciprocal(239, frac_bits);
    BigInt mant = (a5.mantissa << 4) - (a239.mantissa << 2);
    return {BigFixed(std::move(mant), frac_bits), a5.terms + a239.terms};
}

PiApproxReport build_report(PiMethod method, int terms, int frac_bits, BigFixed estimate) {
    PiApproxReport rep;
    rep.method = method;
    rep.terms = terms;
    rep.frac_bits = frac_bits;
    rep.estimate = std::move(estimate);
    BigFixed reference = machin_pi(frac_bits);
    rep.abs_error = (rep.estimate - reference).abs();
    rep.rel_error = rep.abs_error / reference;
    rep.matched_decimal_digits = count_matched_digits(rep.estimate, reference);
    return rep;
}

BigFixed viete_partial_product(const RadicalSequence& seq) {
    BigFixed p = seq.values.front().div_pow2(1);
    for (std::size_t m = 1; m < seq.values.size(); ++m)
        p = (p * seq.values[m]).div_pow2(1);
    return p;
}

void check_cheb_terms(int terms) {
    if (terms < 1) throw std::invalid_argument("pi_engines: need at least one term");
    if (terms > kChebTermCap)
        throw cap_exceeded("pi_engines: Chebyshev engines are capped at M = " +
                           std::to_string(kChebTermCap));
}

} // namespace

BigFixed machin_pi(int frac_bits) {
    if (frac_bits < 1) throw std::invalid_argument("pi_engines: frac_bits must be >= 1");
    const int guard = 32;
    MachinResult wide = machin_pi_terms(frac_bits + guard);
    return wide.value.to_precision(frac_bits);
}

PiApproxReport pi_viete_product(int terms, int frac_bits) {
    if (terms < 1) throw std::invalid_argument("pi_engines: need at least one term");
    if (frac_bits < kVieteMinFracBits)
        throw cap_exceeded("pi_engines: precision underflow, frac_bits must be >= " +
                           std::to_string(kVieteMinFracBits));
    RadicalSequence seq = generate_radicals(terms, frac_bits);
    BigFixed p = viete_partial_product(seq);
    BigFixed estimate = BigFixed::from_int(2, frac_bits) / p;
    return build_report(PiMethod::VieteProduct, terms, frac_bits, std::move(estimate));
}

PiApproxReport pi_cheb_t_sum(int terms, int frac_bits) {
    check_cheb_terms(terms);
    RadicalSequence seq = generate_radicals(terms, frac_bits);
    BigFixed x = seq.values.back().div_pow2(1);
    // 2 * sum of odd T up to degree 2^M - 1 equals 2^M times the partial
    // product, so one shift recovers it.
    BigFixed doubled = sum_odd_t((1L << terms) - 1, x);
    BigFixed p = doubled.div_pow2(terms);
    BigFixed estimate = BigFixed::from_int(2, frac_bits) / p;
    return build_report(PiMethod::ChebTSum, terms, frac_bits, std::move(estimate));
}

PiApproxReport pi_cheb_u(int terms, int frac_bits) {
    check_cheb_terms(terms);
    RadicalSequence seq = generate_radicals(terms, frac_bits);
    BigFixed x = seq.values.back().div_pow2(1);
    BigFixed u = eval_u_recurrence((1L << terms) - 1, x);
    BigFixed p = u.div_pow2(terms);
    BigFixed estimate = BigFixed::from_int(2, frac_bits) / p;
    return build_report(PiMethod::ChebUSingle, terms, frac_bits, std::move(estimate));
}

PiApproxReport pi_machin_reference(int digits) {
    if (digits < 1) throw std::invalid_argument("pi_engines: need at least one digit");
    const int frac_bits = static_cast<int>(std::ceil(digits * kLog2Of10)) + 64;
    MachinResult res = machin_pi_terms(frac_bits);
    return build_report(PiMethod::MachinReference, res.terms, frac_bits,
                        std::move(res.value));
}

std::vector<PiApproxReport> convergence_sweep(PiMethod method, int m_lo, int m_hi,
                                              int frac_bits) {
    if (m_lo < 1 || m_hi < m_lo)
        throw std::invalid_argument("pi_engines: bad sweep range");
    std::vector<PiApproxReport> out;
    out.reserve(static_cast<std::size_t>(m_hi - m_lo) + 1);
    for (int m = m_lo; m <= m_hi; ++m) {
        switch (method) {
        case PiMethod::VieteProduct: out.push_back(pi_viete_product(m, frac_bits)); break;
        case PiMethod::ChebTSum: out.push_back(pi_cheb_t_sum(m, frac_bits)); break;
        case PiMethod::ChebUSingle: out.push_back(pi_cheb_u(m, frac_bits)); break;
        case PiMethod::MachinReference:
            throw std::invalid_argument("pi_engines: Machin reference is not sweepable");
        }
    }
    return out;
}

VieteSizing viete_sizing(int digits) {
    if (digits < 1) throw std::invalid_argument("pi_engines: need at least one digit");
    // ceil(1.661*digits + 4) in exact integer arithmetic
    const long num = 1661L * digits + 4000L;
    const int terms = static_cast<int>((num + 999L) / 1000L);
    const int frac_bits = static_cast<int>(std::ceil(digits * kLog2Of10)) +
                          std::bit_width(static_cast<unsigned>(terms - 1)) + 32;
    return {terms, frac_bits};
}

int count_matched_digits(const BigFixed& a, const BigFixed& b) {
    const int digits = BigFixed::max_decimal_digits(a.frac_bits());
    const std::string sa = a.to_decimal(digits);
    const std::string sb = b.to_decimal(digits);
    int matched = 0;
    std::size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        while (i < sa.size() && (sa[i] == '.' || sa[i] == '-')) ++i;
        while (j < sb.size() && (sb[j] == '.' || sb[j] == '-')) ++j;
        if (i >= sa.size() || j >= sb.size()) break;
        if (sa[i] != sb[j]) break;
        ++matched;
        ++i;
        ++j;
    }
    return matched;
}

const char* pi_method_name(PiMethod method) {
    switch (method) {
    case PiMethod::VieteProduct: return "viete";
    case PiMethod::ChebTSum: return "cheb-sum";
    case PiMethod::ChebUSingle: return "cheb-u";
    case PiMethod::MachinReference: return "machin";
    }
    return "unknown";
}

} // namespace chebpi
