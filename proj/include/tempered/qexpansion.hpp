#pragma once

#include "tempered/primes.hpp"
#include "tempered/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace tempered {

namespace detail {

/// Dense series square, coefficients exact integers. Quadratic time; fine at
/// desk scale (order <= 10^4).
inline std::vector<BigInt> square_series(const std::vector<BigInt>& a) {
    const std::size_t n = a.size();
    std::vector<BigInt> c(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n - i; ++j) {
            if (a[j] == 0) continue;
            c[i + j] += a[i] * a[j];
        }
    }
    return c;
}

}  // namespace detail

/// Ramanujan tau values at primes p <= p_max, from the weight-12 cusp form
/// q prod_{n>=1} (1 - q^n)^24 expanded with exact integer arithmetic.
/// The 24th power is built as ((E^3)^2)^2)^2 where
/// E^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2} (Jacobi's identity), so only
/// three dense squarings are needed.
inline std::map<std::int64_t, BigInt> delta_qexpansion(std::int64_t p_max) {
    if (p_max < 2) throw std::invalid_argument("delta_qexpansion: p_max must be >= 2");
    if (p_max > 10000)
        throw std::invalid_argument("delta_qexpansion: p_max above the supported desk scale (10^4)");
    const std::size_t n = static_cast<std::size_t>(p_max);

    std::vector<BigInt> eta3(n, BigInt(0));
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t idx = k * (k + 1) / 2;
        if (idx >= static_cast<std::int64_t>(n)) break;
        eta3[static_cast<std::size_t>(idx)] = BigInt((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
    }
    const std::vector<BigInt> eta24 = detail::square_series(detail::square_series(detail::square_series(eta3)));

    std::map<std::int64_t, BigInt> tau;
    for (std::int64_t p : primes_up_to(p_max)) tau[p] = eta24[static_cast<std::size_t>(p - 1)];
    return tau;
}

}  // namespace tempered
