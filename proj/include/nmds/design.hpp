#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nmds/code.hpp"
#include "nmds/combinatorics.hpp"
#include "nmds/errors.hpp"
#include "nmds/field.hpp"
#include "nmds/parallel.hpp"

namespace nmds {

// Simple block design candidate: sorted duplicate-free blocks of size k
// over points 0..v-1. Whether it is a t-design is a separate question
// answered by verify_t_design.
struct Design {
    std::uint32_t v = 0;
    std::uint32_t k = 0;
    std::vector<std::vector<std::uint32_t>> blocks;  // each sorted; list sorted lex
};

inline void validate_design(const Design& d) {
    for (const auto& b : d.blocks) {
        if (b.size() != d.k) throw consistency_error("block size mismatch");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] >= d.v) throw consistency_error("point out of range");
            if (i > 0 && b[i] <= b[i - 1]) throw consistency_error("block not strictly sorted");
        }
    }
    for (std::size_t i = 1; i < d.blocks.size(); ++i)
        if (!(d.blocks[i - 1] < d.blocks[i])) throw consistency_error("blocks not sorted or repeated");
}

struct DesignCheck {
    std::uint32_t t = 0;
    bool is_t_design = false;
    std::uint64_t lambda = 0;
    // two t-subsets with different coverage counts when not a design
    std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> counterexample;
};

// Deduplicated supports of the weight-w codewords. Distinct projective
// classes sharing a support would contradict the unique-codeword
// structure of the codes studied here, so this asserts instead of
// deduplicating.
inline Design support_design(const LinearCode& c, std::uint32_t w,
                             std::uint64_t budget = kDefaultBudget, std::size_t workers = 1,
                             SearchRoute route = SearchRoute::Auto) {
    Design d;
    d.v = static_cast<std::uint32_t>(c.length());
    d.k = w;
    for (const LowWeightWord& lw : low_weight_words(c, w, budget, workers, route)) {
        if (!d.blocks.empty() && d.blocks.back() == lw.support)
            throw theorem_violation("two scalar classes share a support");
        d.blocks.push_back(lw.support);
    }
    validate_design(d);
    return d;
}

// Colex unrank: the r-th t-subset in colexicographic order.
inline std::vector<std::uint32_t> colex_unrank(std::uint64_t r, std::uint32_t t) {
    std::vector<std::uint32_t> s(t);
    for (std::uint32_t i = t; i-- > 0;) {
        std::uint32_t c = i;  // smallest value with binom(c, i+1) <= r is >= i
        while (binomial_u64(c + 1, i + 1) <= r) ++c;
        s[i] = c;
        r -= binomial_u64(c, i + 1);
    }
    return s;
}

// Exhaustive coverage count of every t-subset of points. Blocks may be
// sharded across workers; the per-shard counter vectors merge by
// addition, so the outcome is independent of the worker count.
inline DesignCheck verify_t_design(const Design& d, std::uint32_t t,
                                   std::uint64_t budget = kDefaultBudget,
                                   std::size_t workers = 1) {
    if (t < 1 || t > d.k || d.k > d.v) throw spec_parse_error("need 1 <= t <= k <= v");
    const BigInt tsubs = binomial_big(d.v, t);
    if (tsubs > BigInt(budget)) throw budget_exceeded("too many t-subsets for the budget");
    const std::uint64_t slots = static_cast<std::uint64_t>(tsubs);
    // Pascal table so colex ranking in the inner loop is table lookups
    std::vector<std::vector<std::uint64_t>> pasc(d.v + 1, std::vector<std::uint64_t>(t + 2, 0));
    for (std::uint32_t i = 0; i <= d.v; ++i) {
        pasc[i][0] = 1;
        for (std::uint32_t j = 1; j <= t + 1; ++j)
            pasc[i][j] = j > i ? 0 : (i == 0 ? 0 : pasc[i - 1][j - 1] + pasc[i - 1][j]);
    }
    const std::size_t shard_count = workers > 1 ? workers * 8 : 1;
    std::vector<std::vector<std::uint32_t>> partial(shard_count);
    const std::size_t per = (d.blocks.size() + shard_count - 1) / std::max<std::size_t>(shard_count, 1);
    run_sharded(shard_count, workers, [&](std::size_t shard) {
        std::vector<std::uint32_t>& counts = partial[shard];
        counts.assign(slots, 0);
        const std::size_t lo = shard * per;
        const std::size_t hi = std::min(d.blocks.size(), lo + per);
        std::vector<std::uint32_t> pick;
        for (std::size_t b = lo; b < hi; ++b) {
            const std::vector<std::uint32_t>& block = d.blocks[b];
            first_subset(pick, d.k, t);
            do {
                std::uint64_t rank = 0;
                for (std::uint32_t i = 0; i < t; ++i) rank += pasc[block[pick[i]]][i + 1];
                ++counts[rank];
            } while (next_subset(pick, d.k));
        }
    });
    std::vector<std::uint32_t> counts(slots, 0);
    for (const auto& p : partial)
        for (std::uint64_t i = 0; i < slots; ++i) counts[i] += p[i];
    DesignCheck res;
    res.t = t;
    std::uint64_t lo_rank = 0, hi_rank = 0;
    for (std::uint64_t i = 1; i < slots; ++i) {
        if (counts[i] < counts[lo_rank]) lo_rank = i;
        if (counts[i] > counts[hi_rank]) hi_rank = i;
    }
    if (counts[lo_rank] == counts[hi_rank]) {
        res.is_t_design = true;
        res.lambda = counts[0];
    } else {
        res.is_t_design = false;
        res.counterexample = {colex_unrank(lo_rank, t), colex_unrank(hi_rank, t)};
    }
    return res;
}

// A t-(v,k,lambda) design is also an s-design for s <= t with
// lambda_s = lambda * binom(v-s, t-s) / binom(k-s, t-s); the division is
// exact for genuine designs and checked here.
inline BigInt lambda_s(std::uint32_t t, std::uint32_t v, std::uint32_t k, const BigInt& lambda,
                       std::uint32_t s) {
    if (s > t || t > k || k > v) throw spec_parse_error("need s <= t <= k <= v");
    const BigInt num = lambda * binomial_big(v - s, t - s);
    const BigInt den = binomial_big(k - s, t - s);
    if (den == 0 || num % den != 0) throw consistency_error("non-integral derived design count");
    return num / den;
}

inline bool steiner_check(const DesignCheck& c) {
    if (!c.is_t_design) throw spec_parse_error("not a design");
    return c.t >= 2 && c.lambda == 1;
}

inline Design complementary_design(const Design& d) {
    if (d.k >= d.v) throw spec_parse_error("complement needs k < v");
    Design out;
    out.v = d.v;
    out.k = d.v - d.k;
    out.blocks.reserve(d.blocks.size());
    for (const auto& b : d.blocks) {
        std::vector<bool> in(d.v, false);
        for (std::uint32_t p : b) in[p] = true;
        std::vector<std::uint32_t> cb;
        cb.reserve(out.k);
        for (std::uint32_t p = 0; p < d.v; ++p)
            if (!in[p]) cb.push_back(p);
        out.blocks.push_back(std::move(cb));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    validate_design(out);
    if (out.blocks.size() != d.blocks.size())
        throw consistency_error("complementation lost blocks");
    return out;
}

// Assmus-Mattson check at strength t. w_cap is the largest w <= v with
// w - floor((w + q - 2)/(q - 1)) < d, and likewise for the dual; the
// theorem applies when the number of nonzero dual weights in (0, v-t]
// is at most d - t. When it applies, nonzero weights up to the caps (the
// dual capped additionally by v-t) all support t-designs.
struct AssmusMattson {
    bool applies = false;
    std::size_t s_count = 0;
    std::uint32_t w_cap = 0;
    std::uint32_t w_cap_dual = 0;
    std::vector<std::uint32_t> design_weights;
    std::vector<std::uint32_t> design_weights_dual;
};

inline AssmusMattson assmus_mattson(std::size_t n, std::uint64_t q, std::size_t d,
                                    std::size_t d_dual, const WeightDistribution& wd,
                                    const WeightDistribution& wd_dual, std::uint32_t t) {
    if (t >= d) throw spec_parse_error("need t < d");
    if (wd.counts.size() != n + 1 || wd_dual.counts.size() != n + 1)
        throw consistency_error("distribution length mismatch");
    const auto cap = [&](std::size_t dist) {
        std::uint32_t best = 0;
        for (std::uint64_t w = 0; w <= n; ++w)
            if (w - (w + q - 2) / (q - 1) < dist) best = static_cast<std::uint32_t>(w);
        return best;
    };
    AssmusMattson am;
    am.w_cap = cap(d);
    am.w_cap_dual = cap(d_dual);
    for (std::size_t i = 1; i + t <= n; ++i)
        if (wd_dual.counts[i] != 0) ++am.s_count;
    am.applies = am.s_count + t <= d;
    if (!am.applies) return am;
    for (std::size_t i = d; i <= am.w_cap && i <= n; ++i)
        if (wd.counts[i] != 0) am.design_weights.push_back(static_cast<std::uint32_t>(i));
    const std::size_t dual_hi = std::min<std::size_t>(am.w_cap_dual, n - t);
    for (std::size_t i = d_dual; i <= dual_hi; ++i)
        if (wd_dual.counts[i] != 0) am.design_weights_dual.push_back(static_cast<std::uint32_t>(i));
    return am;
}

// e2, the elementary symmetric polynomial of degree 2.
inline Fe e2_quad(const Field& F, Fe x, Fe y, Fe z, Fe w) {
    const Fe xy = F.mul(x, y), xz = F.mul(x, z), xw = F.mul(x, w);
    const Fe yz = F.mul(y, z), yw = F.mul(y, w), zw = F.mul(z, w);
    return F.add(F.add(F.add(xy, xz), F.add(xw, yz)), F.add(yw, zw));
}

inline Fe e2_triple(const Field& F, Fe x, Fe y, Fe z) {
    return F.add(F.add(F.mul(x, y), F.mul(y, z)), F.mul(z, x));
}

// Generic small determinant by Laplace expansion along the first row.
inline Fe small_det(const Field& F, const std::vector<std::vector<Fe>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Fe acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Fe>> minor(n - 1, std::vector<Fe>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        const Fe term = F.mul(m[0][j], small_det(F, minor));
        acc = (j & 1) ? F.sub(acc, term) : F.add(acc, term);
    }
    return acc;
}

// Determinant of [x^-1; x; x^2] columns against the closed form
// (x-y)(y-z)(z-x)(xy+yz+zx)/(xyz); both values returned for comparison.
inline std::pair<Fe, Fe> det_identity_oracle3(const Field& F, Fe x, Fe y, Fe z) {
    if (x == 0 || y == 0 || z == 0) throw division_by_zero("oracle needs nonzero inputs");
    const Fe lhs = small_det(F, {{F.inv(x), F.inv(y), F.inv(z)},
                                 {x, y, z},
                                 {F.mul(x, x), F.mul(y, y), F.mul(z, z)}});
    const Fe diffs = F.mul(F.mul(F.sub(x, y), F.sub(y, z)), F.sub(z, x));
    const Fe rhs = F.mul(F.div(diffs, F.mul(F.mul(x, y), z)), e2_triple(F, x, y, z));
    return {lhs, rhs};
}

// 4x4 variant with rows x^-2, x^-1, x, x^2; closed form is the product of
// the six pairwise differences over (xyzw)^2 times e2(x,y,z,w).
inline std::pair<Fe, Fe> det_identity_oracle4(const Field& F, Fe x, Fe y, Fe z, Fe w) {
    if (x == 0 || y == 0 || z == 0 || w == 0) throw division_by_zero("oracle needs nonzero inputs");
    const auto sq = [&](Fe a) { return F.mul(a, a); };
    const Fe lhs = small_det(F, {{F.inv(sq(x)), F.inv(sq(y)), F.inv(sq(z)), F.inv(sq(w))},
                                 {F.inv(x), F.inv(y), F.inv(z), F.inv(w)},
                                 {x, y, z, w},
                                 {sq(x), sq(y), sq(z), sq(w)}});
    Fe diffs = F.mul(F.mul(F.sub(z, w), F.sub(y, w)), F.sub(y, z));
    diffs = F.mul(diffs, F.mul(F.mul(F.sub(x, w), F.sub(x, z)), F.sub(x, y)));
    const Fe prod2 = sq(F.mul(F.mul(x, y), F.mul(z, w)));
    const Fe rhs = F.mul(F.div(diffs, prod2), e2_quad(F, x, y, z, w));
    return {lhs, rhs};
}

enum class QuadrupleCase { Char3, Char2Even };

// Unique completion of a distinct triple of (q+1)-th roots of unity to a
// quadruple with e2 = 0: w = -(xy+yz+zx)/(x+y+z), the sign collapsing in
// characteristic 2. In characteristic 3 the completion always exists and
// avoids {x,y,z}; in even characteristic it fails exactly when w lands on
// one of the three inputs, and none is returned.
inline std::optional<Fe> complete_quadruple(const Field& ext, QuadrupleCase case_, Fe x, Fe y,
                                            Fe z) {
    if (ext.is_prime_field()) throw field_mismatch("needs the quadratic extension");
    const std::uint64_t n = ext.base_size() + 1;
    const auto in_circle = [&](Fe a) { return a != 0 && ext.pow(a, static_cast<std::int64_t>(n)) == 1; };
    if (!in_circle(x) || !in_circle(y) || !in_circle(z))
        throw spec_parse_error("inputs must be (q+1)-th roots of unity");
    if (x == y || y == z || x == z) throw spec_parse_error("inputs must be pairwise distinct");
    if (case_ == QuadrupleCase::Char3 ? ext.characteristic() != 3
                                      : (ext.characteristic() != 2 || ext.abs_degree() % 4 != 0))
        throw spec_parse_error("case does not match the field");
    const Fe e = e2_triple(ext, x, y, z);
    const Fe s = ext.add(ext.add(x, y), z);
    if (s == 0) throw theorem_violation("x + y + z vanished on the unit circle");
    if (e == 0 && case_ == QuadrupleCase::Char2Even)
        throw theorem_violation("xy + yz + zx vanished on the unit circle in characteristic 2");
    const Fe w = case_ == QuadrupleCase::Char3 ? ext.div(ext.neg(e), s) : ext.div(e, s);
    if (w == x || w == y || w == z) {
        if (case_ == QuadrupleCase::Char3)
            throw theorem_violation("characteristic-3 completion collided with an input");
        return std::nullopt;
    }
    if (!in_circle(w)) throw theorem_violation("completion left the unit circle");
    if (e2_quad(ext, x, y, z, w) != 0) throw consistency_error("completed quadruple fails e2 = 0");
    return w;
}

// Direct construction on the unit circle: points are the exponents of
// gamma, blocks are the 4-subsets with vanishing e2. Restricted to the
// two families where this block set is known to be a design.
inline Design sqs_direct(const FieldPtr& F, bool use_tables = true) {
    const std::uint64_t p = F->characteristic();
    const std::size_t s = F->abs_degree();
    const bool char3 = p == 3 && s >= 2;
    const bool char2 = p == 2 && s >= 4 && s % 2 == 0;
    if (!char3 && !char2) throw spec_parse_error("supported for q = 3^s (s >= 2) and q = 2^s (s >= 4 even)");
    const std::uint64_t q = F->size();
    const FieldPtr ext = build_quadratic_extension(F, use_tables);
    const std::vector<Fe> roots = unit_roots(*ext, q + 1);
    Design d;
    d.v = static_cast<std::uint32_t>(q + 1);
    d.k = 4;
    std::vector<std::uint32_t> sub;
    first_subset(sub, d.v, 4);
    do {
        if (e2_quad(*ext, roots[sub[0]], roots[sub[1]], roots[sub[2]], roots[sub[3]]) == 0)
            d.blocks.push_back(sub);
    } while (next_subset(sub, d.v));
    validate_design(d);
    return d;
}

inline bool same_design(const Design& a, const Design& b) {
    return a.v == b.v && a.k == b.k && a.blocks == b.blocks;
}

}  // namespace nmds
