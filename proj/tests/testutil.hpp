#pragma once

#include <cstdint>
#include <vector>

#include "nmds/code.hpp"
#include "nmds/field.hpp"
#include "nmds/matrix.hpp"

namespace testutil {

// Deterministic 64-bit generator so failures reproduce exactly.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Second opinion for the optimized enumerator: a plain odometer over all
// messages with none of the sharding or premultiplication tricks.
inline nmds::WeightDistribution naive_weight_distribution(const nmds::LinearCode& c) {
    const nmds::FieldPtr& F = c.field();
    const std::size_t n = c.length(), k = c.dimension();
    nmds::WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    std::vector<nmds::Fe> msg(k, 0);
    while (true) {
        std::vector<nmds::Fe> word(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (msg[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                word[j] = F->add(word[j], F->mul(msg[i], c.gen().at(i, j)));
        }
        std::size_t wt = 0;
        for (nmds::Fe x : word) wt += x != 0;
        wd.counts[wt] += 1;
        std::size_t pos = 0;
        while (pos < k) {
            msg[pos] = static_cast<nmds::Fe>((msg[pos] + 1) % F->size());
            if (msg[pos] != 0) break;
            ++pos;
        }
        if (pos == k) break;
    }
    return wd;
}

// Random code over F with the stated shape; dimension may come out lower
// than rows when rows are dependent, which is fine for property tests.
inline nmds::LinearCode random_code(const nmds::FieldPtr& F, std::size_t rows, std::size_t n,
                                    Rng& rng) {
    nmds::Mat g(F, rows, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.at(i, j) = static_cast<nmds::Fe>(rng.below(F->size()));
    return nmds::LinearCode::from_generator_matrix(std::move(g), "random");
}

}  // namespace testutil
