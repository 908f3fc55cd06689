#pragma once

#include <cstdint>
#include <vector>

#include "nmds/bigint.hpp"
#include "nmds/errors.hpp"

namespace nmds {

inline BigInt binomial_big(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);  // exact: r is binom(n, i+1) times a product of earlier steps
    }
    return r;
}

// uint64 variant, throws if the value does not fit.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    BigInt b = binomial_big(n, k);
    if (b > BigInt(~std::uint64_t(0))) throw consistency_error("binomial exceeds uint64");
    return static_cast<std::uint64_t>(b);
}

// First k-subset of {0..n-1} in lexicographic order.
inline bool first_subset(std::vector<std::uint32_t>& s, std::uint32_t n, std::uint32_t k) {
    if (k > n) return false;
    s.resize(k);
    for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
    return true;
}

// Advance to the next k-subset in lexicographic order; false when exhausted.
inline bool next_subset(std::vector<std::uint32_t>& s, std::uint32_t n) {
    const std::uint32_t k = static_cast<std::uint32_t>(s.size());
    if (k == 0) return false;
    std::uint32_t i = k;
    while (i-- > 0) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::uint32_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Colexicographic rank of a strictly increasing t-subset. Colex ranking
// needs no knowledge of n, so counters can be allocated as binom(v,t)
// once and indexed directly.
inline std::uint64_t colex_rank(const std::vector<std::uint32_t>& s) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binomial_u64(s[i], static_cast<std::uint64_t>(i) + 1);
    return r;
}

}  // namespace nmds
