#include "chebpi/chebyshev.hpp"

namespace chebpi {

std::vector<BigInt> pascal_row(long m) {
    if (m < 0) throw std::invalid_argument("chebyshev: negative binomial row");
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(m) + 1);
    row.emplace_back(1);
    for (long k = 1; k <= m; ++k) {
        // C(m,k) = C(m,k-1) * (m-k+1) / k, exactly divisible
        row.push_back(row.back() * BigInt(m - k + 1) / BigInt(k));
    }
    return row;
}

ChebCoeffVector cheb_coeffs(ChebKind kind, long m) {
    if (m < 0) throw std::invalid_argument("chebyshev: negative degree");
    if (m > (1L << 20))
        throw cap_exceeded("chebyshev: coefficient degree cap (2^20) exceeded");
    std::vector<BigInt> prev{BigInt(1)};
    if (m == 0) return {kind, 0, std::move(prev)};
    std::vector<BigInt> cur{BigInt(0), BigInt(kind == ChebKind::FirstKind ? 1 : 2)};
    for (long k = 2; k <= m; ++k) {
        std::vector<BigInt> next(static_cast<std::size_t>(k) + 1);
        for (std::size_t i = 0; i < cur.size(); ++i)
            next[i + 1] = cur[i] + cur[i]; // 2x * cur
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {kind, m, std::move(cur)};
}

} // namespace chebpi
