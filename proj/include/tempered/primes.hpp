#pragma once

#include <cstdint>
#include <vector>

namespace tempered {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<std::int64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

inline std::vector<std::int64_t> first_primes(std::size_t count) {
    std::vector<std::int64_t> out;
    std::int64_t n = 2;
    while (out.size() < count) {
        if (is_prime(n)) out.push_back(n);
        ++n;
    }
    return out;
}

}  // namespace tempered
