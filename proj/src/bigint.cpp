#include "chebpi/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "chebpi/errors.hpp"

namespace chebpi {

namespace {

constexpr std::uint64_t kBase = 1ull << 32;

// Shift a magnitude left by s in [0, 31], appending a carry limb if needed.
std::vector<std::uint32_t> shl_small(const std::vector<std::uint32_t>& a, int s) {
    if (s == 0) return a;
    std::vector<std::uint32_t> r(a.size());
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = (a[i] << s) | carry;
        carry = static_cast<std::uint32_t>(a[i] >> (32 - s));
    }
    if (carry) r.push_back(carry);
    return r;
}

std::vector<std::uint32_t> shr_small(std::vector<std::uint32_t> a, int s) {
    if (s == 0) return a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t hi = (i + 1 < a.size()) ? a[i + 1] : 0;
        a[i] = (a[i] >> s) | (hi << (32 - s));
    }
    return a;
}

} // namespace

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(m));
    if (m >> 32) limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r(hi.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        borrow = d < 0;
        if (d < 0) d += static_cast<std::int64_t>(kBase);
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) { *this = rhs; return *this; }
    if (sign_ == rhs.sign_) {
        limbs_ = add_mag(limbs_, rhs.limbs_);
        return *this;
    }
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) { limbs_.clear(); sign_ = 0; return *this; }
    if (c > 0) {
        limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_mag(rhs.limbs_, limbs_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    return *this += -rhs;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

// Knuth algorithm D on 32-bit limbs. Quotient truncates toward zero,
// remainder carries the dividend's sign.
void BigInt::div_mod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
    if (den.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (num.is_zero()) { quot = BigInt(); rem = BigInt(); return; }
    int c = cmp_mag(num.limbs_, den.limbs_);
    if (c < 0) { quot = BigInt(); rem = num; return; }

    std::vector<std::uint32_t> q, r;
    if (den.limbs_.size() == 1) {
        std::uint32_t d = den.limbs_[0];
        q.resize(num.limbs_.size());
        std::uint64_t carry = 0;
        for (std::size_t i = num.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (carry << 32) | num.limbs_[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            carry = cur % d;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    } else {
        const std::size_t n = den.limbs_.size();
        const std::size_t m = num.limbs_.size() - n;
        const int s = std::countl_zero(den.limbs_.back());
        std::vector<std::uint32_t> v = shl_small(den.limbs_, s); // still n limbs
        std::vector<std::uint32_t> u = shl_small(num.limbs_, s);
        u.resize(num.limbs_.size() + 1, 0);
        q.assign(m + 1, 0);

        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t top2 = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = top2 / v[n - 1];
            std::uint64_t rhat = top2 % v[n - 1];
            while (qhat >= kBase ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= kBase) break;
            }
            // u[j..j+n] -= qhat * v
            std::uint64_t carry = 0;
            std::int64_t borrow = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[j + i]) -
                                 static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
                borrow = t < 0;
                if (t < 0) t += static_cast<std::int64_t>(kBase);
                u[j + i] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            u[j + n] = static_cast<std::uint32_t>(t);
            if (t < 0) {
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t sum = static_cast<std::uint64_t>(u[j + i]) + v[i] + c2;
                    u[j + i] = static_cast<std::uint32_t>(sum);
                    c2 = sum >> 32;
                }
                u[j + n] = static_cast<std::uint32_t>(u[j + n] + c2);
            }
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        r.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
        r = shr_small(std::move(r), s);
    }

    BigInt qq, rr;
    qq.limbs_ = std::move(q);
    qq.sign_ = num.sign_ * den.sign_;
    qq.trim();
    rr.limbs_ = std::move(r);
    rr.sign_ = num.sign_;
    rr.trim();
    quot = std::move(qq);
    rem = std::move(rr);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::div_mod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::div_mod(a, b, q, r);
    return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::div_mod(a, b, q, r);
    if (!r.is_zero() && a.sign() * b.sign() < 0) q -= BigInt(1);
    return q;
}

BigInt& BigInt::operator<<=(std::size_t bits) {
    if (is_zero() || bits == 0) return *this;
    const std::size_t limb_shift = bits / 32;
    const int bit_shift = static_cast<int>(bits % 32);
    limbs_ = shl_small(limbs_, bit_shift);
    limbs_.insert(limbs_.begin(), limb_shift, 0);
    return *this;
}

BigInt& BigInt::operator>>=(std::size_t bits) {
    if (is_zero() || bits == 0) return *this;
    const std::size_t limb_shift = bits / 32;
    const int bit_shift = static_cast<int>(bits % 32);
    bool lost = false;
    if (limb_shift >= limbs_.size()) {
        lost = true;
        limbs_.clear();
    } else {
        for (std::size_t i = 0; i < limb_shift && !lost; ++i) lost = limbs_[i] != 0;
        limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
        if (bit_shift) {
            if (!lost && (limbs_[0] & ((1u << bit_shift) - 1))) lost = true;
            limbs_ = shr_small(std::move(limbs_), bit_shift);
        }
    }
    int old_sign = sign_;
    trim();
    if (old_sign < 0 && lost) {
        // arithmetic shift: round toward -infinity
        limbs_ = add_mag(limbs_, {1});
        sign_ = -1;
    }
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(limbs_, rhs.limbs_) * sign_;
    return c <=> 0;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) +
           static_cast<std::size_t>(32 - std::countl_zero(limbs_.back()));
}

std::uint64_t BigInt::low_u64() const {
    std::uint64_t v = 0;
    if (!limbs_.empty()) v = limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
}

double BigInt::to_double() const {
    if (is_zero()) return 0.0;
    std::size_t bl = bit_length();
    int shift = bl > 64 ? static_cast<int>(bl - 64) : 0;
    std::uint64_t top = (*this >> static_cast<std::size_t>(shift)).low_u64();
    double d = std::ldexp(static_cast<double>(top), shift);
    return sign_ < 0 ? -d : d;
}

BigInt BigInt::pow2(std::size_t k) {
    BigInt r(1);
    r <<= k;
    return r;
}

BigInt BigInt::pow10(std::size_t k) {
    BigInt base(10), r(1);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

BigInt BigInt::from_decimal(std::string_view s) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == s.size()) throw parse_error("BigInt: empty decimal literal");
    BigInt r;
    const BigInt chunk_scale(1000000000);
    std::uint32_t chunk = 0;
    int chunk_len = 0;
    for (; pos < s.size(); ++pos) {
        char ch = s[pos];
        if (ch < '0' || ch > '9') throw parse_error("BigInt: bad digit in decimal literal");
        chunk = chunk * 10 + static_cast<std::uint32_t>(ch - '0');
        if (++chunk_len == 9) {
            r = r * chunk_scale + BigInt(chunk);
            chunk = 0;
            chunk_len = 0;
        }
    }
    if (chunk_len) {
        BigInt scale(1);
        for (int i = 0; i < chunk_len; ++i) scale *= BigInt(10);
        r = r * scale + BigInt(chunk);
    }
    if (sign < 0 && !r.is_zero()) r.sign_ = -1;
    return r;
}

std::string BigInt::to_decimal() const {
    if (is_zero()) return "0";
    BigInt v = abs();
    const BigInt chunk_scale(1000000000);
    std::string out; // digits accumulate least-significant first
    while (!v.is_zero()) {
        BigInt q, r;
        div_mod(v, chunk_scale, q, r);
        std::uint64_t digits = r.low_u64();
        for (int i = 0; i < 9; ++i) {
            out.push_back(static_cast<char>('0' + digits % 10));
            digits /= 10;
        }
        v = std::move(q);
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

BigInt BigInt::isqrt(const BigInt& n) {
    if (n.sign() < 0) throw std::domain_error("BigInt: isqrt of negative value");
    if (n.is_zero()) return BigInt();
    const std::size_t bl = n.bit_length();
    if (bl <= 52) {
        std::uint64_t v = n.low_u64();
        auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
        while (r > 0 && r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return BigInt(static_cast<std::int64_t>(r));
    }
    // Seed strictly above sqrt(n) from the top ~52 bits (even shift keeps
    // the square-root relation), then Newton until the iterate stops
    // decreasing.
    std::size_t s = bl - 52;
    s += s & 1;
    std::uint64_t top = (n >> s).low_u64();
    auto a = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(top)));
    while (a > 0 && a * a > top) --a;
    while ((a + 1) * (a + 1) <= top) ++a;
    BigInt x = BigInt(static_cast<std::int64_t>(a + 1)) << (s / 2);
    while (true) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

} // namespace chebpi
