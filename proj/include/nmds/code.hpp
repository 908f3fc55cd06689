#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmds/bigint.hpp"
#include "nmds/combinatorics.hpp"
#include "nmds/errors.hpp"
#include "nmds/field.hpp"
#include "nmds/matrix.hpp"
#include "nmds/parallel.hpp"
#include "nmds/poly.hpp"

namespace nmds {

inline constexpr std::uint64_t kDefaultBudget = 1ull << 26;

// [n, k] linear code over a runtime field. Generator and parity-check
// matrices are kept in reduced row echelon form, so two codes are equal
// exactly when their generator matrices are identical. gen * parity^T = 0
// is checked at construction. Cyclic codes remember their generator
// polynomial.
class LinearCode {
public:
    const FieldPtr& field() const { return F_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    const Mat& gen() const { return gen_; }
    const Mat& parity() const { return parity_; }
    const std::optional<Poly>& gen_poly() const { return gen_poly_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    static LinearCode from_generator_matrix(Mat rows, std::string label = "") {
        LinearCode c;
        c.F_ = rows.field();
        c.n_ = rows.cols();
        c.label_ = std::move(label);
        rows.rref();
        c.k_ = rows.rows();
        c.gen_ = std::move(rows);
        c.parity_ = kernel_basis(c.gen_);
        c.validate();
        return c;
    }

    static LinearCode from_parity_matrix(Mat rows, std::string label = "") {
        LinearCode c;
        c.F_ = rows.field();
        c.n_ = rows.cols();
        c.label_ = std::move(label);
        rows.rref();
        c.parity_ = std::move(rows);
        c.k_ = c.n_ - c.parity_.rows();
        c.gen_ = kernel_basis(c.parity_);
        c.validate();
        return c;
    }

    // Cyclic code of length n from a monic divisor g of x^n - 1; rows are
    // the shifts x^i g(x), i < n - deg g.
    static LinearCode from_generator_poly(const Poly& g, std::uint64_t n, std::string label = "") {
        const FieldPtr& F = g.F;
        if (g.is_zero() || !g.is_monic()) throw spec_parse_error("generator polynomial must be monic");
        if (static_cast<std::uint64_t>(g.deg()) > n) throw spec_parse_error("generator degree exceeds length");
        if (!poly_mod(poly_xn_minus_1(F, n), g).is_zero())
            throw spec_parse_error("generator polynomial does not divide x^n - 1");
        const std::size_t k = static_cast<std::size_t>(n) - static_cast<std::size_t>(g.deg());
        Mat rows(F, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < g.c.size(); ++j) rows.at(i, i + j) = g.c[j];
        LinearCode c = from_generator_matrix(std::move(rows), std::move(label));
        if (c.k_ != k) throw consistency_error("cyclic generator rows are dependent");
        c.gen_poly_ = g;
        return c;
    }

private:
    void validate() const {
        if (k_ > n_) throw consistency_error("dimension exceeds length");
        if (parity_.rows() != n_ - k_) throw consistency_error("parity rank mismatch");
        if (k_ > 0 && n_ > k_ && !is_zero_matrix(mat_mul(gen_, transpose(parity_))))
            throw consistency_error("generator rows fail the parity checks");
    }

    FieldPtr F_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    Mat gen_;
    Mat parity_;
    std::optional<Poly> gen_poly_;
    std::string label_;
};

inline bool same_code(const LinearCode& a, const LinearCode& b) {
    return a.field()->same_field(*b.field()) && a.length() == b.length() && a.gen() == b.gen();
}

inline bool code_contains(const LinearCode& c, const std::vector<Fe>& word) {
    if (word.size() != c.length()) return false;
    const FieldPtr& F = c.field();
    for (std::size_t i = 0; i < c.parity().rows(); ++i) {
        Fe acc = 0;
        for (std::size_t j = 0; j < c.length(); ++j)
            acc = F->add(acc, F->mul(c.parity().at(i, j), word[j]));
        if (acc != 0) return false;
    }
    return true;
}

// Monic reciprocal x^deg(h) h(1/x) / h(0); needs h(0) != 0.
inline Poly poly_reciprocal_monic(const Poly& h) {
    if (h.is_zero() || h.c[0] == 0) throw consistency_error("reciprocal needs nonzero constant term");
    std::vector<Fe> r(h.c.rbegin(), h.c.rend());
    return poly_monic(Poly(h.F, std::move(r)));
}

inline LinearCode dual(const LinearCode& c) {
    LinearCode d = LinearCode::from_generator_matrix(c.parity(),
                                                     c.label().empty() ? "" : "dual:" + c.label());
    if (c.gen_poly()) {
        // dual of a cyclic code is cyclic with the monic reciprocal of
        // h = (x^n - 1) / g as its generator
        const Poly h = poly_divmod(poly_xn_minus_1(c.field(), c.length()), *c.gen_poly()).first;
        const Poly gd = poly_reciprocal_monic(h);
        LinearCode viaPoly = LinearCode::from_generator_poly(gd, c.length(), d.label());
        if (!same_code(viaPoly, d)) throw consistency_error("cyclic dual disagrees with kernel dual");
        return viaPoly;
    }
    return d;
}

// Append an overall parity-check coordinate: each row gains the negated
// sum of its entries.
inline LinearCode extend(const LinearCode& c) {
    const FieldPtr& F = c.field();
    Mat rows(F, c.dimension(), c.length() + 1);
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        Fe s = 0;
        for (std::size_t j = 0; j < c.length(); ++j) {
            rows.at(i, j) = c.gen().at(i, j);
            s = F->add(s, c.gen().at(i, j));
        }
        rows.at(i, c.length()) = F->neg(s);
    }
    return LinearCode::from_generator_matrix(std::move(rows),
                                             c.label().empty() ? "" : "extend:" + c.label());
}

// Same generator rows read over an extension field on the tower of the
// base field; the span over the larger field.
inline LinearCode lift(const LinearCode& c, const FieldPtr& ext) {
    if (!ext->contains(*c.field())) throw field_mismatch("lift target must contain the code field");
    Mat rows(ext, c.dimension(), c.length());
    for (std::size_t i = 0; i < c.dimension(); ++i)
        for (std::size_t j = 0; j < c.length(); ++j)
            rows.at(i, j) = ext->embed(*c.field(), c.gen().at(i, j));
    return LinearCode::from_generator_matrix(
        std::move(rows),
        c.label().empty() ? "" : "lift:" + ext->spec_string() + ":" + c.label());
}

// Codewords with all coordinates in the subfield, as a code over the
// subfield. Each parity row splits into abs_degree rows of subfield
// constraints through the coefficient expansion of its entries.
inline LinearCode subfield_subcode(const LinearCode& c, const FieldPtr& sub) {
    const FieldPtr& F = c.field();
    if (F->same_field(*sub)) return c;
    if (!(sub->is_prime_field() && sub->characteristic() == F->characteristic()))
        throw spec_parse_error("subfield subcode supported onto the prime subfield only");
    const std::size_t s = F->abs_degree();
    const std::size_t rows_in = c.parity().rows();
    Mat expanded(sub, rows_in * s, c.length());
    for (std::size_t i = 0; i < rows_in; ++i)
        for (std::size_t j = 0; j < c.length(); ++j) {
            const std::vector<Fe> coeffs = F->abs_coeffs(c.parity().at(i, j));
            for (std::size_t l = 0; l < s; ++l) expanded.at(i * s + l, j) = coeffs[l];
        }
    LinearCode out = LinearCode::from_generator_matrix(
        kernel_basis(expanded),
        c.label().empty() ? "" : "subfield:" + sub->spec_string() + ":" + c.label());
    // Delsarte bound: dim >= n - s*(n - k); also dim <= k trivially
    const std::size_t n = c.length(), k = c.dimension();
    const std::size_t lower = n > s * (n - k) ? n - s * (n - k) : 0;
    if (out.dimension() > k || out.dimension() < lower)
        throw consistency_error("subfield subcode dimension outside provable range");
    return out;
}

// Coordinatewise trace image of the code, as a code over the subfield.
// Row spans: Tr(alpha^l * g_i) over the power basis of the field.
inline LinearCode trace_code(const LinearCode& c, const FieldPtr& sub) {
    const FieldPtr& F = c.field();
    if (F->same_field(*sub)) return c;
    if (!(sub->is_prime_field() && sub->characteristic() == F->characteristic()))
        throw spec_parse_error("trace code supported onto the prime subfield only");
    const std::size_t s = F->abs_degree();
    Mat rows(sub, c.dimension() * s, c.length());
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        Fe basis = 1;
        for (std::size_t l = 0; l < s; ++l) {
            for (std::size_t j = 0; j < c.length(); ++j)
                rows.at(i * s + l, j) = trace_abs(*F, F->mul(basis, c.gen().at(i, j)));
            basis = F->mul(basis, F->alpha());
        }
    }
    return LinearCode::from_generator_matrix(
        std::move(rows),
        c.label().empty() ? "" : "trace:" + sub->spec_string() + ":" + c.label());
}

// Narrow-sense-style BCH code over F of length n with designed distance
// delta and first consecutive root exponent h: the cyclic code whose
// generator is the least common multiple of the minimal polynomials of
// beta^h, ..., beta^(h+delta-2).
struct BchSpec {
    FieldPtr field;
    std::uint64_t n = 0;
    std::uint32_t delta = 0;
    std::int64_t h = 1;
};

inline std::string bch_label(const BchSpec& s) {
    return "bch:q=" + s.field->spec_string() + ",n=" + std::to_string(s.n) +
           ",delta=" + std::to_string(s.delta) + ",h=" + std::to_string(s.h);
}

inline LinearCode bch(const BchSpec& spec, bool use_tables = true) {
    const FieldPtr& F = spec.field;
    if (spec.n < 2) throw spec_parse_error("length must be at least 2");
    if (spec.delta < 2 || spec.delta > spec.n) throw spec_parse_error("delta out of range");
    const RootContext ctx = nth_root_field(F, spec.n, use_tables);
    const CosetTable cosets = cyclotomic_cosets(spec.n, F->size());
    std::vector<std::uint64_t> leaders;
    for (std::uint32_t i = 0; i + 2 <= spec.delta; ++i) {
        std::int64_t e = (spec.h + static_cast<std::int64_t>(i)) % static_cast<std::int64_t>(spec.n);
        if (e < 0) e += static_cast<std::int64_t>(spec.n);
        leaders.push_back(coset_leader(cosets, static_cast<std::uint64_t>(e)));
    }
    std::sort(leaders.begin(), leaders.end());
    leaders.erase(std::unique(leaders.begin(), leaders.end()), leaders.end());
    Poly g = poly_const(F, 1);
    for (std::uint64_t lead : leaders)
        g = poly_mul(g, minimal_polynomial(F, ctx.ext, ctx.beta, cosets.cosets.at(lead)));
    return LinearCode::from_generator_poly(g, spec.n, bch_label(spec));
}

// Parity rows [gamma^i; gamma^(2i)] over the quadratic extension for a
// length q+1 code whose roots lie in the norm-one circle of GF(q^2).
struct CircleParity {
    FieldPtr ext;
    Fe gamma = 0;
    Mat H;  // 2 x (q+1) over ext
};

inline CircleParity unit_circle_parity(const FieldPtr& F, bool use_tables = true) {
    CircleParity cp;
    cp.ext = build_quadratic_extension(F, use_tables);
    const std::uint64_t n = F->size() + 1;
    const std::vector<Fe> roots = unit_roots(*cp.ext, n);
    cp.gamma = roots[1];
    cp.H = Mat(cp.ext, 2, n);
    for (std::uint64_t i = 0; i < n; ++i) {
        cp.H.at(0, i) = roots[i];
        cp.H.at(1, i) = cp.ext->mul(roots[i], roots[i]);
    }
    return cp;
}

// Exact weight distribution; counts are exact integers.
struct WeightDistribution {
    std::vector<BigInt> counts;  // index = weight, size n + 1

    BigInt total() const {
        BigInt t = 0;
        for (const BigInt& c : counts) t += c;
        return t;
    }
};

inline std::uint64_t enum_cost(std::uint64_t q, std::size_t k) {
    std::uint64_t cost = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (cost > (1ull << 62) / q) return ~0ull;
        cost *= q;
    }
    return cost;
}

namespace detail {

// Walk all messages with fixed first digit, maintaining partial sums, and
// tally codeword weights. Rows beyond the first are added depth-first;
// the innermost level runs over a premultiplied table of the last row.
struct EnumShard {
    const FieldPtr& F;
    const Mat& gen;
    std::size_t n, k;
    std::vector<std::vector<Fe>> premul_last;  // q rows of a * gen[k-1]

    // cur holds the contribution of digits 0..depth; digit depth+1 is
    // iterated here, the final digit k-1 through the premultiplied table.
    void tally(std::vector<std::uint64_t>& counts, std::vector<Fe>& cur, std::size_t depth) const {
        if (depth + 2 == k) {
            const std::uint64_t q = F->size();
            for (std::uint64_t a = 0; a < q; ++a) {
                const Fe* pm = premul_last[a].data();
                std::size_t w = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (F->add(cur[j], pm[j]) != 0) ++w;
                ++counts[w];
            }
            return;
        }
        const std::uint64_t q = F->size();
        std::vector<Fe> next(n);
        for (std::uint64_t a = 0; a < q; ++a) {
            if (a == 0) {
                tally(counts, cur, depth + 1);
                continue;
            }
            for (std::size_t j = 0; j < n; ++j)
                next[j] = F->add(cur[j], F->mul(static_cast<Fe>(a), gen.at(depth + 1, j)));
            tally(counts, next, depth + 1);
        }
    }
};

}  // namespace detail

// Full message-space enumeration, sharded over the first message digit.
// Shard results merge by weight, so the output is identical for every
// worker count.
inline WeightDistribution weight_distribution_enum(const LinearCode& c,
                                                   std::uint64_t budget = kDefaultBudget,
                                                   std::size_t workers = 1) {
    const FieldPtr& F = c.field();
    const std::size_t n = c.length(), k = c.dimension();
    const std::uint64_t q = F->size();
    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    if (k == 0) {
        wd.counts[0] = 1;
        return wd;
    }
    if (enum_cost(q, k) > budget)
        throw budget_exceeded("message space " + std::to_string(q) + "^" + std::to_string(k) +
                              " exceeds budget " + std::to_string(budget));
    detail::EnumShard ctx{F, c.gen(), n, k, {}};
    ctx.premul_last.assign(q, std::vector<Fe>(n, 0));
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::size_t j = 0; j < n; ++j)
            ctx.premul_last[a][j] = F->mul(static_cast<Fe>(a), c.gen().at(k - 1, j));
    std::vector<std::vector<std::uint64_t>> shard_counts(q, std::vector<std::uint64_t>(n + 1, 0));
    run_sharded(q, workers, [&](std::size_t shard) {
        std::vector<Fe> cur(n, 0);
        if (k == 1) {
            // single row: the shard digit is the innermost digit
            if (shard == 0) {
                for (std::uint64_t a = 0; a < q; ++a) {
                    std::size_t w = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (ctx.premul_last[a][j] != 0) ++w;
                    ++shard_counts[0][w];
                }
            }
            return;
        }
        for (std::size_t j = 0; j < n; ++j)
            cur[j] = F->mul(static_cast<Fe>(shard), c.gen().at(0, j));
        ctx.tally(shard_counts[shard], cur, 0);
    });
    for (std::uint64_t s = 0; s < q; ++s)
        for (std::size_t w = 0; w <= n; ++w) wd.counts[w] += shard_counts[s][w];
    if (wd.counts[0] != 1) throw consistency_error("zero word counted more than once");
    if (wd.total() != big_pow(q, k)) throw consistency_error("enumerated count differs from q^k");
    return wd;
}

// MacWilliams transform of a weight distribution. Exact; any non-integral
// intermediate flags inconsistent input.
inline WeightDistribution macwilliams_transform(const WeightDistribution& wd, std::size_t n,
                                                std::size_t k, std::uint64_t q) {
    if (wd.counts.size() != n + 1) throw consistency_error("distribution length mismatch");
    const BigInt qk = big_pow(q, k);
    if (wd.total() != qk) throw consistency_error("distribution does not sum to q^k");
    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (wd.counts[i] == 0) continue;
            // Krawtchouk K_j(i) = sum_s (-1)^s binom(i,s) binom(n-i, j-s) (q-1)^(j-s)
            BigInt kv = 0;
            for (std::size_t s = 0; s <= std::min(i, j); ++s) {
                BigInt term = binomial_big(i, s) * binomial_big(n - i, j - s) *
                              big_pow(q - 1, static_cast<std::uint64_t>(j - s));
                if (s & 1)
                    kv -= term;
                else
                    kv += term;
            }
            acc += wd.counts[i] * kv;
        }
        if (acc % qk != 0) throw consistency_error("MacWilliams transform not integral");
        out.counts[j] = acc / qk;
    }
    if (out.counts[0] != 1 || out.total() != big_pow(q, n - k))
        throw consistency_error("transformed distribution inconsistent");
    return out;
}

// Minimum distance by ascending-weight column dependency search over the
// parity-check matrix. At the first weight with any dependency the kernel
// vector necessarily has full support; both facts are asserted. witness
// is the lexicographically first support.
struct MinDistance {
    std::optional<std::uint32_t> d;
    std::uint32_t searched_up_to = 0;  // all weights <= this were ruled out when !d
    std::vector<std::uint32_t> witness_support;
    std::vector<Fe> witness_word;  // full length, scaled so the first nonzero entry is 1
};

inline MinDistance min_distance(const LinearCode& c, std::uint32_t w_max = 0,
                                std::uint64_t budget = kDefaultBudget) {
    const FieldPtr& F = c.field();
    const std::size_t n = c.length();
    if (c.dimension() == 0) throw spec_parse_error("minimum distance of the zero code");
    if (w_max == 0 || w_max > n) w_max = static_cast<std::uint32_t>(n);
    MinDistance res;
    if (c.dimension() == n) {
        res.d = 1;
        res.witness_support = {0};
        res.witness_word.assign(n, 0);
        res.witness_word[0] = 1;
        res.searched_up_to = 1;
        return res;
    }
    const Mat& H = c.parity();
    std::uint64_t spent = 0;
    for (std::uint32_t w = 1; w <= w_max; ++w) {
        const BigInt level = binomial_big(n, w);
        if (BigInt(spent) + level > BigInt(budget)) return res;  // searched_up_to frozen below w
        spent += static_cast<std::uint64_t>(level);
        std::vector<std::uint32_t> sub;
        first_subset(sub, static_cast<std::uint32_t>(n), w);
        do {
            Mat m(F, H.rows(), w);
            for (std::size_t i = 0; i < H.rows(); ++i)
                for (std::uint32_t j = 0; j < w; ++j) m.at(i, j) = H.at(i, sub[j]);
            Mat ker = kernel_basis(std::move(m));
            if (ker.rows() == 0) continue;
            if (ker.rows() > 1)
                throw theorem_violation("kernel dimension above 1 at minimal weight");
            res.witness_word.assign(n, 0);
            for (std::uint32_t j = 0; j < w; ++j) {
                if (ker.at(0, j) == 0)
                    throw theorem_violation("zero coordinate in minimal-weight dependency");
                res.witness_word[sub[j]] = ker.at(0, j);
            }
            res.d = w;
            res.searched_up_to = w;
            res.witness_support.assign(sub.begin(), sub.end());
            if (!code_contains(c, res.witness_word))
                throw consistency_error("distance witness not in the code");
            return res;
        } while (next_subset(sub, static_cast<std::uint32_t>(n)));
        res.searched_up_to = w;
    }
    return res;
}

// One projective class of codewords of a fixed weight: the support and
// the representative scaled so its first nonzero coordinate is 1.
struct LowWeightWord {
    std::vector<std::uint32_t> support;
    std::vector<Fe> word;
};

namespace detail {

inline void collect_if_weight_w(const std::vector<Fe>& cw, std::uint32_t w,
                                std::vector<LowWeightWord>& out) {
    std::uint32_t weight = 0;
    std::size_t first = cw.size();
    for (std::size_t j = 0; j < cw.size(); ++j) {
        if (cw[j] != 0) {
            if (first == cw.size()) first = j;
            if (++weight > w) return;
        }
    }
    if (weight != w || first == cw.size()) return;
    if (cw[first] != 1) return;  // one representative per projective class
    LowWeightWord lw;
    lw.word = cw;
    lw.support.reserve(w);
    for (std::size_t j = 0; j < cw.size(); ++j)
        if (cw[j] != 0) lw.support.push_back(static_cast<std::uint32_t>(j));
    out.push_back(std::move(lw));
}

inline void enum_words_rec(const FieldPtr& F, const Mat& gen, std::size_t depth,
                           std::vector<Fe>& cur, std::uint32_t w,
                           std::vector<LowWeightWord>& out) {
    const std::size_t n = gen.cols();
    if (depth == gen.rows()) {
        collect_if_weight_w(cur, w, out);
        return;
    }
    const std::uint64_t q = F->size();
    std::vector<Fe> saved = cur;
    for (std::uint64_t a = 0; a < q; ++a) {
        if (a == 0) {
            enum_words_rec(F, gen, depth + 1, cur, w, out);
            continue;
        }
        for (std::size_t j = 0; j < n; ++j)
            cur[j] = F->add(saved[j], F->mul(static_cast<Fe>(a), gen.at(depth, j)));
        enum_words_rec(F, gen, depth + 1, cur, w, out);
    }
    cur = saved;
}

}  // namespace detail

// Route selection for low-weight collection: message-space enumeration
// or parity-column dependency search over w-subsets. Auto picks messages
// when q^k fits the budget. Both routes emit identical canonical output.
enum class SearchRoute { Auto, Messages, Subsets };

// All projective classes of weight-w codewords, sorted by support.
inline std::vector<LowWeightWord> low_weight_words(const LinearCode& c, std::uint32_t w,
                                                   std::uint64_t budget = kDefaultBudget,
                                                   std::size_t workers = 1,
                                                   SearchRoute route = SearchRoute::Auto) {
    const FieldPtr& F = c.field();
    const std::size_t n = c.length(), k = c.dimension();
    const std::uint64_t q = F->size();
    if (w == 0 || w > n) throw spec_parse_error("weight out of range");
    std::vector<LowWeightWord> all;
    if (k == 0) return all;
    if (route == SearchRoute::Auto)
        route = enum_cost(q, k) <= budget ? SearchRoute::Messages : SearchRoute::Subsets;
    if (route == SearchRoute::Messages) {
        if (enum_cost(q, k) > budget) throw budget_exceeded("message space exceeds budget");
        std::vector<std::vector<LowWeightWord>> shard_out(q);
        run_sharded(q, workers, [&](std::size_t shard) {
            std::vector<Fe> cur(n, 0);
            for (std::size_t j = 0; j < n; ++j)
                cur[j] = F->mul(static_cast<Fe>(shard), c.gen().at(0, j));
            detail::enum_words_rec(F, c.gen(), 1, cur, w, shard_out[shard]);
        });
        for (auto& part : shard_out)
            for (auto& lw : part) all.push_back(std::move(lw));
    } else {
        const BigInt subsets = binomial_big(n, w);
        if (subsets > BigInt(budget))
            throw budget_exceeded("subset count exceeds the budget");
        const Mat& H = c.parity();
        std::vector<std::uint32_t> sub;
        first_subset(sub, static_cast<std::uint32_t>(n), w);
        do {
            Mat m(F, H.rows(), w);
            for (std::size_t i = 0; i < H.rows(); ++i)
                for (std::uint32_t j = 0; j < w; ++j) m.at(i, j) = H.at(i, sub[j]);
            Mat ker = kernel_basis(std::move(m));
            if (ker.rows() == 0) continue;
            // all projective classes inside the kernel, keeping the
            // full-support ones
            const std::size_t dim = ker.rows();
            std::vector<std::uint64_t> lam(dim, 0);
            std::vector<Fe> v(w);
            std::uint64_t classes = 1;
            for (std::size_t i = 0; i < dim; ++i) classes *= q;
            for (std::uint64_t codev = 1; codev < classes; ++codev) {
                std::uint64_t x = codev;
                for (std::size_t i = 0; i < dim; ++i) {
                    lam[i] = x % q;
                    x /= q;
                }
                // canonical class representative: last nonzero lambda = 1
                std::size_t top = dim;
                for (std::size_t i = dim; i-- > 0;)
                    if (lam[i] != 0) {
                        top = i;
                        break;
                    }
                if (lam[top] != 1) continue;
                bool full = true;
                for (std::uint32_t j = 0; j < w && full; ++j) {
                    Fe acc = 0;
                    for (std::size_t i = 0; i <= top; ++i)
                        if (lam[i] != 0)
                            acc = F->add(acc, F->mul(static_cast<Fe>(lam[i]), ker.at(i, j)));
                    v[j] = acc;
                    full = acc != 0;
                }
                if (!full) continue;
                // rescale so the first support coordinate is 1
                const Fe scale = F->inv(v[0]);
                LowWeightWord lw;
                lw.word.assign(n, 0);
                lw.support.assign(sub.begin(), sub.end());
                for (std::uint32_t j = 0; j < w; ++j) lw.word[sub[j]] = F->mul(v[j], scale);
                all.push_back(std::move(lw));
            }
        } while (next_subset(sub, static_cast<std::uint32_t>(n)));
    }
    std::sort(all.begin(), all.end(), [](const LowWeightWord& a, const LowWeightWord& b) {
        if (a.support != b.support) return a.support < b.support;
        return a.word < b.word;
    });
    for (const LowWeightWord& lw : all)
        if (!code_contains(c, lw.word)) throw consistency_error("low-weight word not in the code");
    return all;
}

// Sphere packing bound at distance d: admissibility of [n, k, d]_q and
// the largest dimension the bound allows at the same n, d.
struct SpherePacking {
    bool admissible = false;
    std::uint32_t k_max = 0;
};

inline SpherePacking sphere_packing_check(std::size_t n, std::size_t k, std::size_t d,
                                          std::uint64_t q) {
    if (d == 0 || d > n) throw spec_parse_error("distance out of range");
    const std::size_t t = (d - 1) / 2;
    BigInt vol = 0;
    for (std::size_t i = 0; i <= t; ++i)
        vol += binomial_big(n, i) * big_pow(q - 1, static_cast<std::uint64_t>(i));
    const BigInt qn = big_pow(q, n);
    SpherePacking sp;
    sp.admissible = big_pow(q, k) * vol <= qn;
    std::uint32_t km = 0;
    BigInt qk = 1;
    while (qk * BigInt(q) * vol <= qn && km < n) {
        qk *= q;
        ++km;
    }
    sp.k_max = km;
    return sp;
}

}  // namespace nmds
