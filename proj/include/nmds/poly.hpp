#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nmds/errors.hpp"
#include "nmds/field.hpp"

namespace nmds {

// Dense univariate polynomial over a runtime field. Coefficients are
// ascending and carry no trailing zeros; the zero polynomial has an empty
// coefficient vector and degree -1.
struct Poly {
    FieldPtr F;
    std::vector<Fe> c;

    Poly() = default;
    Poly(FieldPtr f, std::vector<Fe> coeffs) : F(std::move(f)), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Fe coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    Fe lead() const {
        if (c.empty()) throw consistency_error("leading coefficient of zero polynomial");
        return c.back();
    }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
};

inline void require_same_field(const Poly& a, const Poly& b) {
    if (!a.F || !b.F || !a.F->same_field(*b.F)) throw field_mismatch("polynomials over different fields");
}

inline Poly poly_zero(const FieldPtr& F) { return Poly(F, {}); }
inline Poly poly_const(const FieldPtr& F, Fe v) { return Poly(F, {v}); }
inline Poly poly_x(const FieldPtr& F) { return Poly(F, {0, 1}); }

// x^n - 1
inline Poly poly_xn_minus_1(const FieldPtr& F, std::uint64_t n) {
    std::vector<Fe> c(n + 1, 0);
    c[0] = F->neg(1);
    c[n] = 1;
    return Poly(F, std::move(c));
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<Fe> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.F->add(a.coeff(i), b.coeff(i));
    return Poly(a.F, std::move(c));
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<Fe> c(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.F->sub(a.coeff(i), b.coeff(i));
    return Poly(a.F, std::move(c));
}

inline Poly poly_scale(const Poly& a, Fe s) {
    std::vector<Fe> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.F->mul(a.c[i], s);
    return Poly(a.F, std::move(c));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(a.F);
    std::vector<Fe> c(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = a.F->add(c[i + j], a.F->mul(a.c[i], b.c[j]));
    }
    return Poly(a.F, std::move(c));
}

// Quotient and remainder; b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    if (a.deg() < b.deg()) return {poly_zero(a.F), a};
    const Fe lead_inv = a.F->inv(b.lead());
    std::vector<Fe> rem = a.c;
    std::vector<Fe> quo(a.c.size() - b.c.size() + 1, 0);
    for (std::size_t i = rem.size(); i-- > b.c.size() - 1;) {
        if (i + 1 < b.c.size()) break;
        const std::size_t shift = i + 1 - b.c.size();
        const Fe q = a.F->mul(rem[i], lead_inv);
        if (q == 0) continue;
        quo[shift] = q;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            rem[shift + j] = a.F->sub(rem[shift + j], a.F->mul(q, b.c[j]));
    }
    return {Poly(a.F, std::move(quo)), Poly(a.F, std::move(rem))};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

inline Poly poly_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.F->inv(a.lead()));
}

// Monic gcd; gcd(0,0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero(a.F);
    const Poly g = poly_gcd(a, b);
    return poly_monic(poly_divmod(poly_mul(a, b), g).first);
}

inline Fe poly_eval(const Poly& a, Fe x) {
    Fe acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = a.F->add(a.F->mul(acc, x), a.c[i]);
    return acc;
}

inline bool poly_equal(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    return a.c == b.c;
}

inline std::string poly_to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || a.c[i] != 1) s += std::to_string(a.c[i]);
        if (i == 0) continue;
        if (a.c[i] != 1) s += "*";
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

// Partition of Z_n into q-cyclotomic cosets {s*q^j mod n}. Leaders are
// coset minima; members are sorted ascending.
struct CosetTable {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> leaders;                         // ascending
    std::map<std::uint64_t, std::vector<std::uint64_t>> cosets;  // leader -> members
};

inline CosetTable cyclotomic_cosets(std::uint64_t n, std::uint64_t q) {
    if (n == 0) throw spec_parse_error("modulus must be positive");
    if (std::gcd(n, q) != 1) throw spec_parse_error("q must be invertible mod n");
    CosetTable t;
    t.n = n;
    t.q = q;
    std::vector<bool> seen(n, false);
    for (std::uint64_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::uint64_t> coset;
        std::uint64_t x = s;
        do {
            seen[x] = true;
            coset.push_back(x);
            x = (x * (q % n)) % n;
        } while (x != s);
        std::sort(coset.begin(), coset.end());
        t.leaders.push_back(s);
        t.cosets.emplace(s, std::move(coset));
    }
    return t;
}

inline std::uint64_t coset_leader(const CosetTable& t, std::uint64_t s) {
    s %= t.n;
    std::uint64_t x = s, best = s;
    do {
        best = std::min(best, x);
        x = (x * (t.q % t.n)) % t.n;
    } while (x != s);
    return best;
}

// Multiplicative order of q modulo n.
inline std::size_t ord_mod(std::uint64_t n, std::uint64_t q) {
    if (n == 1) return 1;
    if (std::gcd(n, q) != 1) throw spec_parse_error("q must be invertible mod n");
    std::uint64_t x = q % n;
    std::size_t m = 1;
    while (x != 1) {
        x = (x * (q % n)) % n;
        ++m;
        if (m > n) throw consistency_error("order computation did not terminate");
    }
    return m;
}

// Smallest-degree extension of F containing the n-th roots of unity,
// together with the canonical primitive n-th root beta = alpha^((Q-1)/n).
// Degree 2 is realised as a tower over F; degree 1 reuses F itself; other
// degrees are built directly over the prime field, which restricts them
// to prime F (all constructions here need only these cases).
struct RootContext {
    FieldPtr ext;
    Fe beta = 0;
    std::size_t m = 0;
};

inline RootContext nth_root_field(const FieldPtr& F, std::uint64_t n, bool use_tables = true) {
    RootContext ctx;
    ctx.m = ord_mod(n, F->size());
    if (ctx.m == 1) {
        ctx.ext = F;
    } else if (ctx.m == 2) {
        ctx.ext = build_quadratic_extension(F, use_tables);
    } else {
        if (!F->is_prime_field())
            throw spec_parse_error("splitting field of degree > 2 over a non-prime field");
        ctx.ext = build_field(F->characteristic(), ctx.m, use_tables);
    }
    const std::uint64_t order = ctx.ext->size() - 1;
    if (order % n != 0) throw consistency_error("splitting field misses n-th roots");
    ctx.beta = ctx.ext->pow(ctx.ext->alpha(), static_cast<std::int64_t>(order / n));
    return ctx;
}

// prod_{i in coset} (x - beta^i), computed in ext and projected onto the
// base field coefficient by coefficient. A coefficient outside the base
// field means the coset is not closed under the base-field Frobenius.
inline Poly minimal_polynomial(const FieldPtr& base, const FieldPtr& ext, Fe beta,
                               const std::vector<std::uint64_t>& coset) {
    if (!ext->contains(*base)) throw field_mismatch("base is not a subfield of ext");
    std::vector<Fe> acc{1};  // monic product over ext
    for (std::uint64_t i : coset) {
        const Fe root = ext->pow(beta, static_cast<std::int64_t>(i));
        std::vector<Fe> next(acc.size() + 1, 0);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = ext->add(next[j + 1], acc[j]);
            next[j] = ext->sub(next[j], ext->mul(acc[j], root));
        }
        acc = std::move(next);
    }
    std::vector<Fe> out(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) out[j] = ext->project(*base, acc[j]);
    return Poly(base, std::move(out));
}

// Monic irreducible factors of x^n - 1 over F, one per cyclotomic coset,
// ordered by ascending coset leader. The product is checked against
// x^n - 1 before returning.
inline std::vector<Poly> factor_xn_minus_1(const FieldPtr& F, std::uint64_t n,
                                           bool use_tables = true) {
    const RootContext ctx = nth_root_field(F, n, use_tables);
    const CosetTable cosets = cyclotomic_cosets(n, F->size());
    std::vector<Poly> factors;
    factors.reserve(cosets.leaders.size());
    for (std::uint64_t lead : cosets.leaders)
        factors.push_back(minimal_polynomial(F, ctx.ext, ctx.beta, cosets.cosets.at(lead)));
    Poly prod = poly_const(F, 1);
    for (const Poly& f : factors) prod = poly_mul(prod, f);
    if (!poly_equal(prod, poly_xn_minus_1(F, n)))
        throw consistency_error("factor product differs from x^n - 1");
    return factors;
}

}  // namespace nmds
