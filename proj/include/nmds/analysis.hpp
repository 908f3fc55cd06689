#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nmds/bigint.hpp"
#include "nmds/code.hpp"
#include "nmds/combinatorics.hpp"
#include "nmds/errors.hpp"

namespace nmds {

enum class CodeClass { MDS, AMDSOnly, NMDS, Other };

enum class Extremality { Extremal, AlmostExtremal, Neither };

inline const char* to_string(CodeClass c) {
    switch (c) {
        case CodeClass::MDS: return "MDS";
        case CodeClass::AMDSOnly: return "AMDS-only";
        case CodeClass::NMDS: return "NMDS";
        default: return "other";
    }
}

inline const char* to_string(Extremality e) {
    switch (e) {
        case Extremality::Extremal: return "extremal";
        case Extremality::AlmostExtremal: return "almost-extremal";
        default: return "neither";
    }
}

// Classification of an [n, k, d] code with dual distance d_dual by
// Singleton defects. A code is near MDS exactly when both defects are 1,
// equivalently d + d_dual = n.
struct NmdsReport {
    std::size_t n = 0, k = 0, d = 0, d_dual = 0;
    std::uint64_t q = 0;
    std::int64_t defect = 0, defect_dual = 0;
    CodeClass classification = CodeClass::Other;
    Extremality extremality = Extremality::Neither;
    std::string label;
};

// d and d_dual are inputs computed once by the caller; this avoids a
// second expensive distance search and keeps one source of truth.
inline NmdsReport classify(const LinearCode& code, const LinearCode& dual_code, std::size_t d,
                           std::size_t d_dual) {
    if (code.length() != dual_code.length() ||
        code.dimension() + dual_code.dimension() != code.length())
        throw consistency_error("codes are not a dual pair");
    NmdsReport r;
    r.n = code.length();
    r.k = code.dimension();
    r.d = d;
    r.d_dual = d_dual;
    r.q = code.field()->size();
    r.label = code.label();
    r.defect = static_cast<std::int64_t>(r.n) - static_cast<std::int64_t>(r.k) + 1 -
               static_cast<std::int64_t>(d);
    r.defect_dual = static_cast<std::int64_t>(r.k) + 1 - static_cast<std::int64_t>(d_dual);
    if (r.defect < 0 || r.defect_dual < 0) throw consistency_error("distance above Singleton bound");
    if (r.defect == 0)
        r.classification = CodeClass::MDS;
    else if (r.defect == 1 && r.defect_dual == 1)
        r.classification = CodeClass::NMDS;
    else if (r.defect == 1)
        r.classification = CodeClass::AMDSOnly;
    else
        r.classification = CodeClass::Other;
    if (r.classification == CodeClass::NMDS) {
        // maximal length of an NMDS code is n = 2q + k; one below is the
        // almost-extremal shape [2q + k, k + 1, 2q - 1]
        if (r.n == 2 * r.q + r.k)
            r.extremality = Extremality::Extremal;
        else if (r.n + 1 == 2 * r.q + r.k)
            r.extremality = Extremality::AlmostExtremal;
    }
    return r;
}

// Closed-form weight distributions of a near MDS [n, k] pair from the
// shared minimum-weight count A_min = A_{n-k} = A_k of the dual:
//   A_{n-k+s} = binom(n,k-s) * sum_{j<s} (-1)^j binom(n-k+s,j)(q^{s-j}-1)
//               + (-1)^s binom(k,s) A_min
// and the same shape with k and n-k exchanged on the dual side. Sums are
// checked against q^k and q^{n-k}.
inline std::pair<WeightDistribution, WeightDistribution> nmds_weight_formulas(std::size_t n,
                                                                              std::size_t k,
                                                                              std::uint64_t q,
                                                                              const BigInt& A_min) {
    if (k == 0 || k >= n) throw spec_parse_error("degenerate dimension for a near MDS pair");
    if (A_min < 0) throw spec_parse_error("negative minimum-weight count");
    const auto one_side = [&](std::size_t dim) {
        // distribution of an [n, dim, n-dim] near MDS code
        WeightDistribution wd;
        wd.counts.assign(n + 1, 0);
        wd.counts[0] = 1;
        wd.counts[n - dim] = A_min;
        for (std::size_t s = 1; s <= dim; ++s) {
            BigInt acc = 0;
            for (std::size_t j = 0; j < s; ++j) {
                const BigInt term = binomial_big(n - dim + s, j) *
                                    (big_pow(q, static_cast<std::uint64_t>(s - j)) - 1);
                if (j & 1)
                    acc -= term;
                else
                    acc += term;
            }
            BigInt a = binomial_big(n, dim - s) * acc;
            const BigInt tail = binomial_big(dim, s) * A_min;
            if (s & 1)
                a -= tail;
            else
                a += tail;
            if (a < 0) throw consistency_error("negative weight count from closed form");
            wd.counts[n - dim + s] = a;
        }
        if (wd.total() != big_pow(q, dim))
            throw consistency_error("closed-form distribution does not sum to q^k");
        return wd;
    };
    return {one_side(k), one_side(n - k)};
}

// Upper bounds on the minimum-weight counts of a near MDS pair:
// A_{n-k} <= binom(n,k-1)(q-1)/k and, applied to the dual,
// A_k^dual <= binom(n,k+1)(q-1)/(n-k). Returned as exact rationals;
// equality on the primal side forces A_{n-k+1} = 0.
inline std::pair<BigRat, BigRat> a_min_bound(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k == 0 || k >= n) throw spec_parse_error("degenerate dimension");
    const BigRat primal = BigRat(binomial_big(n, k - 1) * (q - 1), BigInt(k));
    const BigRat dual = BigRat(binomial_big(n, k + 1) * (q - 1), BigInt(n - k));
    return {primal, dual};
}

// Structure facts that hold for almost MDS codes: the length bound, the
// conditional dual statement, and generation by the two lowest weights.
struct StructureCheck {
    std::string property;
    std::string verdict;  // "pass", "fail", "n/a"
};

inline std::vector<StructureCheck> amds_structure_checks(const LinearCode& code, std::size_t d,
                                                         std::size_t d_dual,
                                                         std::uint64_t budget = kDefaultBudget) {
    const std::size_t n = code.length(), k = code.dimension();
    const std::uint64_t q = code.field()->size();
    std::vector<StructureCheck> out;
    if (k >= 2)
        out.push_back({"length bound n <= k + 2q", n <= k + 2 * q ? "pass" : "fail"});
    else
        out.push_back({"length bound n <= k + 2q", "n/a"});
    if (n - k > q)
        out.push_back({"dual AMDS when n-k > q", d_dual == k ? "pass" : "fail"});
    else
        out.push_back({"dual AMDS when n-k > q", "n/a"});
    // generated by words of weights d and d+1
    if (k == n) {
        out.push_back({"generated by weights d and d+1", "pass"});
        return out;
    }
    std::vector<LowWeightWord> words = low_weight_words(code, static_cast<std::uint32_t>(d), budget);
    if (d + 1 <= n) {
        std::vector<LowWeightWord> more =
            low_weight_words(code, static_cast<std::uint32_t>(d + 1), budget);
        words.insert(words.end(), more.begin(), more.end());
    }
    Mat span(code.field(), words.size(), n);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) span.at(i, j) = words[i].word[j];
    out.push_back({"generated by weights d and d+1", rank_of(std::move(span)) == k ? "pass" : "fail"});
    return out;
}

// Disjointness pairing of minimum-weight supports of a near MDS pair:
// every minimum-weight support S of the code meets every minimum-weight
// dual support except exactly one, and the correspondence is a bijection.
struct PairingTable {
    std::vector<std::vector<std::uint32_t>> supports;       // weight n-k, sorted
    std::vector<std::vector<std::uint32_t>> dual_supports;  // weight k, sorted
    std::vector<std::size_t> pair_of;  // index into dual_supports per support
};

inline PairingTable min_weight_pairing(const LinearCode& code, const LinearCode& dual_code,
                                       std::uint64_t budget = kDefaultBudget,
                                       std::size_t workers = 1) {
    const std::size_t n = code.length(), k = code.dimension();
    PairingTable t;
    for (const LowWeightWord& w :
         low_weight_words(code, static_cast<std::uint32_t>(n - k), budget, workers))
        t.supports.push_back(w.support);
    for (const LowWeightWord& w :
         low_weight_words(dual_code, static_cast<std::uint32_t>(k), budget, workers))
        t.dual_supports.push_back(w.support);
    if (t.supports.size() != t.dual_supports.size())
        throw theorem_violation("minimum-weight support counts differ across the dual pair");
    std::vector<bool> used(t.dual_supports.size(), false);
    t.pair_of.assign(t.supports.size(), 0);
    for (std::size_t i = 0; i < t.supports.size(); ++i) {
        std::vector<bool> in_s(n, false);
        for (std::uint32_t p : t.supports[i]) in_s[p] = true;
        std::size_t found = t.dual_supports.size();
        for (std::size_t j = 0; j < t.dual_supports.size(); ++j) {
            bool disjoint = true;
            for (std::uint32_t p : t.dual_supports[j])
                if (in_s[p]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            if (found != t.dual_supports.size())
                throw theorem_violation("two disjoint dual supports for one support");
            found = j;
        }
        if (found == t.dual_supports.size())
            throw theorem_violation("no disjoint dual support");
        if (used[found]) throw theorem_violation("pairing is not injective");
        used[found] = true;
        t.pair_of[i] = found;
    }
    return t;
}

// Zero gaps in the primal distribution predict designs among the dual
// minimum-weight (weight k) codewords: A_{n-k+s} = 0 implies the weight-k
// words of the dual support a (k-s)-design.
struct DesignPrediction {
    std::size_t weight = 0;  // weight in the dual code
    std::size_t t = 0;       // predicted design strength
    std::size_t s = 0;       // the vanishing gap index
};

inline std::vector<DesignPrediction> dldesign_predict(const NmdsReport& r,
                                                      const WeightDistribution& wd,
                                                      const WeightDistribution& wd_dual) {
    if (r.classification != CodeClass::NMDS)
        throw spec_parse_error("design prediction needs a near MDS code");
    if (wd.counts.size() != r.n + 1 || wd_dual.counts.size() != r.n + 1)
        throw consistency_error("distribution length mismatch");
    std::vector<DesignPrediction> out;
    if (wd_dual.counts[r.k] == 0) return out;  // no weight-k dual words, nothing to predict
    for (std::size_t s = 1; s < r.k && r.n - r.k + s <= r.n; ++s) {
        if (wd.counts[r.n - r.k + s] != 0) continue;
        out.push_back({r.k, r.k - s, s});
    }
    return out;
}

}  // namespace nmds
