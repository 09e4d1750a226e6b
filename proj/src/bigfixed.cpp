#include "chebpi/bigfixed.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "chebpi/errors.hpp"

namespace chebpi {

namespace {
constexpr double kLog10Of2 = 0.30102999566398119521;
}

BigFixed::BigFixed(BigInt mantissa, int frac_bits)
    : mant_(std::move(mantissa)), frac_bits_(frac_bits) {
    if (frac_bits < 1) throw std::invalid_argument("BigFixed: frac_bits must be >= 1");
}

void BigFixed::check_same_precision(const BigFixed& a, const BigFixed& b) {
    if (a.frac_bits_ != b.frac_bits_)
        throw precision_mismatch("BigFixed: operands carry different frac_bits (" +
                                 std::to_string(a.frac_bits_) + " vs " +
                                 std::to_string(b.frac_bits_) + ")");
}

BigFixed BigFixed::from_int(std::int64_t v, int frac_bits) {
    if (frac_bits < 1) throw std::invalid_argument("BigFixed: frac_bits must be >= 1");
    return BigFixed(BigInt(v) << static_cast<std::size_t>(frac_bits), frac_bits);
}

BigFixed BigFixed::ulp(int frac_bits) {
    return BigFixed(BigInt(1), frac_bits);
}

BigFixed BigFixed::from_decimal(std::string_view s, int frac_bits) {
    if (frac_bits < 1) throw std::invalid_argument("BigFixed: frac_bits must be >= 1");
    std::size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    std::string digits;
    std::size_t frac_len = 0;
    bool seen_point = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        char ch = s[pos];
        if (ch == '.') {
            if (seen_point) throw parse_error("BigFixed: repeated decimal point");
            seen_point = true;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_point) ++frac_len;
        } else {
            throw parse_error("BigFixed: unexpected character in decimal literal");
        }
    }
    if (!seen_digit) throw parse_error("BigFixed: decimal literal has no digits");
    // value = digits / 10^frac_len; truncate the scaled mantissa toward zero
    BigInt scaled = BigInt::from_decimal(digits) << static_cast<std::size_t>(frac_bits);
    BigInt mant = scaled / BigInt::pow10(frac_len);
    if (sign < 0) mant = -mant;
    return BigFixed(std::move(mant), frac_bits);
}

BigFixed BigFixed::from_double(double v, int frac_bits) {
    if (!std::isfinite(v)) throw std::invalid_argument("BigFixed: non-finite double");
    if (frac_bits < 1) throw std::invalid_argument("BigFixed: frac_bits must be >= 1");
    if (v == 0.0) return BigFixed(BigInt(), frac_bits);
    int exp = 0;
    double m = std::frexp(v, &exp); // v = m * 2^exp, |m| in [0.5, 1)
    auto scaled = static_cast<std::int64_t>(std::ldexp(m, 53)); // exact integer
    BigInt mant(scaled);
    int shift = exp - 53 + frac_bits;
    if (shift >= 0) mant <<= static_cast<std::size_t>(shift);
    else mant >>= static_cast<std::size_t>(-shift); // floor
    return BigFixed(std::move(mant), frac_bits);
}

BigFixed operator+(const BigFixed& a, const BigFixed& b) {
    BigFixed::check_same_precision(a, b);
    return BigFixed(a.mant_ + b.mant_, a.frac_bits_);
}

BigFixed operator-(const BigFixed& a, const BigFixed& b) {
    BigFixed::check_same_precision(a, b);
    return BigFixed(a.mant_ - b.mant_, a.frac_bits_);
}

BigFixed operator*(const BigFixed& a, const BigFixed& b) {
    BigFixed::check_same_precision(a, b);
    return BigFixed((a.mant_ * b.mant_) >> static_cast<std::size_t>(a.frac_bits_),
                    a.frac_bits_);
}

BigFixed operator/(const BigFixed& a, const BigFixed& b) {
    BigFixed::check_same_precision(a, b);
    if (b.is_zero()) throw std::domain_error("BigFixed: division by zero");
    return BigFixed(floor_div(a.mant_ << static_cast<std::size_t>(a.frac_bits_), b.mant_),
                    a.frac_bits_);
}

BigFixed sqrt(const BigFixed& a) {
    if (a.sign() < 0) throw std::domain_error("BigFixed: sqrt of negative value");
    return BigFixed(BigInt::isqrt(a.mant_ << static_cast<std::size_t>(a.frac_bits_)),
                    a.frac_bits_);
}

BigFixed BigFixed::mul_pow2(int k) const {
    if (k < 0) return div_pow2(-k);
    return BigFixed(mant_ << static_cast<std::size_t>(k), frac_bits_);
}

BigFixed BigFixed::div_pow2(int k) const {
    if (k < 0) return mul_pow2(-k);
    return BigFixed(mant_ >> static_cast<std::size_t>(k), frac_bits_);
}

BigFixed BigFixed::to_precision(int frac_bits) const {
    if (frac_bits < 1) throw std::invalid_argument("BigFixed: frac_bits must be >= 1");
    if (frac_bits == frac_bits_) return *this;
    if (frac_bits > frac_bits_)
        return BigFixed(mant_ << static_cast<std::size_t>(frac_bits - frac_bits_), frac_bits);
    return BigFixed(mant_ >> static_cast<std::size_t>(frac_bits_ - frac_bits), frac_bits);
}

bool BigFixed::operator==(const BigFixed& rhs) const {
    check_same_precision(*this, rhs);
    return mant_ == rhs.mant_;
}

std::strong_ordering BigFixed::operator<=>(const BigFixed& rhs) const {
    check_same_precision(*this, rhs);
    return mant_ <=> rhs.mant_;
}

int BigFixed::max_decimal_digits(int frac_bits) {
    return static_cast<int>(std::floor(frac_bits * kLog10Of2));
}

std::string BigFixed::to_decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("BigFixed: negative digit count");
    if (digits > max_decimal_digits(frac_bits_))
        throw std::invalid_argument("BigFixed: requested digits exceed the precision (" +
                                    std::to_string(digits) + " > " +
                                    std::to_string(max_decimal_digits(frac_bits_)) + ")");
    BigInt mag = mant_.abs();
    const auto fb = static_cast<std::size_t>(frac_bits_);
    BigInt ipart = mag >> fb;
    BigInt frac = mag - (ipart << fb);
    std::string out;
    if (mant_.sign() < 0) out.push_back('-');
    out += ipart.to_decimal();
    if (digits == 0) return out;
    out.push_back('.');
    int remaining = digits;
    const BigInt chunk_scale(1000000000);
    while (remaining > 0) {
        int take = remaining >= 9 ? 9 : remaining;
        if (take == 9) {
            frac = frac * chunk_scale;
        } else {
            BigInt scale(1);
            for (int i = 0; i < take; ++i) scale *= BigInt(10);
            frac = frac * scale;
        }
        BigInt chunk = frac >> fb;
        frac -= chunk << fb;
        std::string cs = chunk.to_decimal();
        out.append(static_cast<std::size_t>(take) - cs.size(), '0');
        out += cs;
        remaining -= take;
    }
    return out;
}

std::string BigFixed::to_scientific(int sig_digits) const {
    if (sig_digits < 1) throw std::invalid_argument("BigFixed: need at least one digit");
    if (is_zero()) return "0";
    BigInt mag = mant_.abs();
    const auto fb = static_cast<std::size_t>(frac_bits_);
    const BigInt one_scaled = BigInt::pow2(fb);

    // Estimate floor(log10 |v|) from the top bits, then fix up exactly.
    std::size_t bl = mag.bit_length();
    int top_shift = bl > 64 ? static_cast<int>(bl - 64) : 0;
    double lg = std::log10(static_cast<double>((mag >> static_cast<std::size_t>(top_shift)).low_u64())) +
                (top_shift - static_cast<double>(frac_bits_)) * kLog10Of2;
    auto e10 = static_cast<long>(std::floor(lg));
    auto value_below_pow10 = [&](long k) {
        // |v| < 10^k  <=>  mag < 10^k * 2^fb (k >= 0), mag * 10^-k < 2^fb otherwise
        if (k >= 0) return mag < BigInt::pow10(static_cast<std::size_t>(k)) * one_scaled;
        return mag * BigInt::pow10(static_cast<std::size_t>(-k)) < one_scaled;
    };
    while (value_below_pow10(e10)) --e10;
    while (!value_below_pow10(e10 + 1)) ++e10;

    long p = sig_digits - 1 - e10;
    BigInt digits_int;
    if (p >= 0) {
        digits_int = (mag * BigInt::pow10(static_cast<std::size_t>(p))) >> fb;
    } else {
        digits_int = mag / (BigInt::pow10(static_cast<std::size_t>(-p)) << fb);
    }
    std::string ds = digits_int.to_decimal();

    std::string out;
    if (mant_.sign() < 0) out.push_back('-');
    out.push_back(ds[0]);
    if (ds.size() > 1) {
        out.push_back('.');
        out.append(ds, 1, std::string::npos);
    }
    char expbuf[16];
    std::snprintf(expbuf, sizeof expbuf, "e%+03ld", e10);
    out += expbuf;
    return out;
}

double BigFixed::to_double() const {
    if (is_zero()) return 0.0;
    BigInt mag = mant_.abs();
    std::size_t bl = mag.bit_length();
    int shift = bl > 64 ? static_cast<int>(bl - 64) : 0;
    std::uint64_t top = (mag >> static_cast<std::size_t>(shift)).low_u64();
    double d = std::ldexp(static_cast<double>(top), shift - frac_bits_);
    return mant_.sign() < 0 ? -d : d;
}

} // namespace chebpi
