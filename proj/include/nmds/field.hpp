#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nmds/errors.hpp"

namespace nmds {

// Field elements are plain integer codes. The code of an element is its
// coefficient vector over the base field read as an integer with the
// constant term least significant; for a prime field the code is the
// residue itself. All per-field state lives in the Field object.
using Fe = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomials over GF(p) used only by the modulus scan, before any
// Field object exists. Coefficients ascending, no trailing zeros.
using PPoly = std::vector<std::uint64_t>;

inline void ppoly_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // f is monic; school reduction
    const std::size_t m = f.size() - 1;
    for (std::size_t i = c.size(); i-- > m;) {
        const std::uint64_t q = c[i];
        if (q == 0) continue;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const std::size_t k = i - m + j;
            c[k] = (c[k] + (p - (q * f[j]) % p)) % p;
        }
    }
    c.resize(m);
    ppoly_trim(c);
    return c;
}

inline PPoly ppoly_powmod(PPoly base, std::uint64_t e, const PPoly& f, std::uint64_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = ppoly_mulmod(r, base, f, p);
        base = ppoly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline PPoly ppoly_gcd(PPoly a, PPoly b, std::uint64_t p) {
    ppoly_trim(a);
    ppoly_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        std::uint64_t lead = b.back();
        std::uint64_t inv = 1;  // lead^(p-2)
        {
            std::uint64_t x = lead, e = p - 2;
            std::uint64_t acc = 1;
            while (e) {
                if (e & 1) acc = (acc * x) % p;
                x = (x * x) % p;
                e >>= 1;
            }
            inv = acc;
        }
        PPoly r = a;
        while (r.size() >= b.size() && !r.empty()) {
            const std::uint64_t q = (r.back() * inv) % p;
            const std::size_t shift = r.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                r[shift + j] = (r[shift + j] + (p - (q * b[j]) % p)) % p;
            ppoly_trim(r);
            if (r.size() < b.size()) break;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: f of degree m over GF(p) is irreducible iff x^(p^m) = x mod f
// and gcd(x^(p^(m/l)) - x, f) = 1 for every prime l dividing m.
inline bool ppoly_irreducible(const PPoly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    PPoly x{0, 1};
    PPoly t = x;
    std::vector<PPoly> powers(m + 1);  // powers[i] = x^(p^i) mod f
    powers[0] = x;
    for (std::size_t i = 1; i <= m; ++i) {
        t = ppoly_powmod(t, p, f, p);
        powers[i] = t;
    }
    if (powers[m] != x) return false;
    for (std::uint64_t l : prime_factors(m)) {
        PPoly d = powers[m / l];
        // d - x
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        ppoly_trim(d);
        PPoly g = ppoly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

// Immutable runtime finite field. Prime fields carry no base; extensions
// hold a shared pointer to their base field plus a monic irreducible
// modulus over it. Towers nest: GF(q^2) over GF(q) over GF(p).
class Field : public std::enable_shared_from_this<Field> {
public:
    std::uint64_t characteristic() const { return p_; }
    std::size_t degree() const { return m_; }  // over the direct base
    std::size_t abs_degree() const { return abs_m_; }
    std::uint64_t size() const { return q_; }
    bool is_prime_field() const { return base_ == nullptr; }
    const FieldPtr& base() const { return base_; }
    Fe alpha() const { return alpha_; }
    bool tables_enabled() const { return use_tables_; }

    // Modulus over the base field, ascending, monic. Prime fields report
    // the formal modulus y so descriptions are uniform.
    const std::vector<Fe>& modulus() const { return modulus_; }

    bool same_field(const Field& o) const {
        if (this == &o) return true;
        if (p_ != o.p_ || m_ != o.m_ || q_ != o.q_ || modulus_ != o.modulus_) return false;
        if (!base_ != !o.base_) return false;
        return !base_ || base_->same_field(*o.base_);
    }

    Fe add(Fe a, Fe b) const {
        check(a); check(b);
        if (add_tab_ptr_) return add_tab_ptr_[static_cast<std::size_t>(a) * q_ + b];
        return add_structural(a, b);
    }

    Fe neg(Fe a) const {
        check(a);
        if (!neg_tab_.empty()) return neg_tab_[a];
        return neg_structural(a);
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const {
        check(a); check(b);
        if (a == 0 || b == 0) return 0;
        if (!log_tab_.empty()) return exp_tab_[static_cast<std::size_t>(log_tab_[a]) + log_tab_[b]];
        return mul_structural(a, b);
    }

    Fe inv(Fe a) const {
        check(a);
        if (a == 0) throw division_by_zero();
        if (!log_tab_.empty()) return exp_tab_[(q_ - 1) - log_tab_[a]];
        return pow_structural(a, q_ - 2);
    }

    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    // a^e with e any integer; 0^0 = 1, negative powers of zero throw.
    Fe pow(Fe a, std::int64_t e) const {
        check(a);
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) throw division_by_zero("negative power of zero");
            return 0;
        }
        const std::int64_t ord = static_cast<std::int64_t>(q_ - 1);
        std::int64_t r = e % ord;
        if (r < 0) r += ord;
        if (!log_tab_.empty()) {
            const std::uint64_t idx = (static_cast<std::uint64_t>(log_tab_[a]) * static_cast<std::uint64_t>(r)) % (q_ - 1);
            return exp_tab_[idx];
        }
        return pow_structural(a, static_cast<std::uint64_t>(r));
    }

    std::uint64_t mult_order(Fe a) const {
        check(a);
        if (a == 0) throw division_by_zero("order of zero");
        std::uint64_t ord = q_ - 1;
        for (std::uint64_t f : detail::prime_factors(q_ - 1)) {
            while (ord % f == 0 && pow(a, static_cast<std::int64_t>(ord / f)) == 1) ord /= f;
        }
        return ord;
    }

    // Base-field digit vector of a, length degree().
    std::vector<Fe> digits(Fe a) const {
        check(a);
        std::vector<Fe> d(m_);
        const std::uint64_t bq = base_size();
        std::uint64_t x = a;
        for (std::size_t i = 0; i < m_; ++i) {
            d[i] = static_cast<Fe>(x % bq);
            x /= bq;
        }
        return d;
    }

    // Coefficient vector over the prime field, towers flattened, length
    // abs_degree(). Any fixed GF(p)-basis works for linear-constraint
    // splitting; this one comes from the nested digit expansion.
    std::vector<Fe> abs_coeffs(Fe a) const {
        if (!base_) return {a};
        std::vector<Fe> out;
        out.reserve(abs_m_);
        for (Fe d : digits(a)) {
            const std::vector<Fe> inner = base_->abs_coeffs(d);
            out.insert(out.end(), inner.begin(), inner.end());
        }
        return out;
    }

    Fe from_digits(const std::vector<Fe>& d) const {
        if (d.size() > m_) throw field_mismatch("digit vector too long");
        const std::uint64_t bq = base_size();
        std::uint64_t x = 0;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] >= bq) throw field_mismatch("digit out of range");
            x = x * bq + d[i];
        }
        return static_cast<Fe>(x);
    }

    // True when `sub` appears in this field's tower (itself, a base along
    // the tower, or the prime subfield). Elements of any such subfield
    // keep their code under embedding, so embed/project are code-stable.
    bool contains(const Field& sub) const {
        if (same_field(sub)) return true;
        if (base_ && base_->contains(sub)) return true;
        return sub.is_prime_field() && sub.p_ == p_;
    }

    bool in_subfield(const Field& sub, Fe x) const {
        check(x);
        if (!contains(sub)) throw field_mismatch("not a subfield on this tower");
        return x < sub.size();
    }

    Fe embed(const Field& sub, Fe x) const {
        if (!contains(sub)) throw field_mismatch("not a subfield on this tower");
        if (x >= sub.size()) throw field_mismatch("element outside subfield");
        return x;
    }

    Fe project(const Field& sub, Fe x) const {
        if (!in_subfield(sub, x)) throw consistency_error("element not in claimed subfield");
        return x;
    }

    std::string spec_string() const {
        if (abs_m_ == 1) return std::to_string(p_);
        return std::to_string(p_) + "^" + std::to_string(abs_m_);
    }

    std::uint64_t base_size() const { return base_ ? base_->size() : p_; }

    friend FieldPtr build_field(std::uint64_t p, std::size_t m, bool use_tables);
    friend FieldPtr build_quadratic_extension(const FieldPtr& base, bool use_tables);

private:
    Field() = default;

    void check(Fe a) const {
        if (a >= q_) throw field_mismatch("element code out of range");
    }

    Fe add_structural(Fe a, Fe b) const {
        if (!base_) return static_cast<Fe>((static_cast<std::uint64_t>(a) + b) % p_);
        const std::uint64_t bq = base_->size();
        std::uint64_t x = a, y = b, r = 0, place = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            r += static_cast<std::uint64_t>(base_->add(static_cast<Fe>(x % bq), static_cast<Fe>(y % bq))) * place;
            x /= bq; y /= bq; place *= bq;
        }
        return static_cast<Fe>(r);
    }

    Fe neg_structural(Fe a) const {
        if (!base_) return a == 0 ? 0 : static_cast<Fe>(p_ - a);
        const std::uint64_t bq = base_->size();
        std::uint64_t x = a, r = 0, place = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            r += static_cast<std::uint64_t>(base_->neg(static_cast<Fe>(x % bq))) * place;
            x /= bq; place *= bq;
        }
        return static_cast<Fe>(r);
    }

    Fe mul_structural(Fe a, Fe b) const {
        if (!base_) return static_cast<Fe>((static_cast<std::uint64_t>(a) * b) % p_);
        const std::vector<Fe> da = digits(a), db = digits(b);
        std::vector<Fe> c(2 * m_ - 1, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (std::size_t j = 0; j < m_; ++j)
                c[i + j] = base_->add(c[i + j], base_->mul(da[i], db[j]));
        }
        // modulus is monic of degree m_
        for (std::size_t i = c.size(); i-- > m_;) {
            const Fe lead = c[i];
            if (lead == 0) continue;
            c[i] = 0;
            for (std::size_t j = 0; j < m_; ++j)
                c[i - m_ + j] = base_->sub(c[i - m_ + j], base_->mul(lead, modulus_[j]));
        }
        c.resize(m_);
        return from_digits(c);
    }

    Fe pow_structural(Fe a, std::uint64_t e) const {
        Fe r = 1, x = a;
        while (e) {
            if (e & 1) r = mul_structural(r, x);
            x = mul_structural(x, x);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        neg_tab_.resize(q_);
        for (std::uint64_t a = 0; a < q_; ++a) neg_tab_[a] = neg_structural(static_cast<Fe>(a));
        // exp doubled so mul can skip the mod on index sums
        exp_tab_.resize(2 * (q_ - 1));
        log_tab_.assign(q_, 0);
        Fe x = 1;
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            exp_tab_[i] = x;
            exp_tab_[i + (q_ - 1)] = x;
            log_tab_[x] = static_cast<std::uint32_t>(i);
            x = mul_structural(x, alpha_);
        }
        if (x != 1) throw consistency_error("exp table did not close");
        if (q_ <= kAddTableMax) {
            add_tab_.resize(q_ * q_);
            for (std::uint64_t a = 0; a < q_; ++a)
                for (std::uint64_t b = 0; b < q_; ++b)
                    add_tab_[a * q_ + b] = add_structural(static_cast<Fe>(a), static_cast<Fe>(b));
            add_tab_ptr_ = add_tab_.data();
        }
    }

    void find_alpha() {
        for (std::uint64_t c = 1; c < q_; ++c) {
            // structural order check; tables are not built yet
            std::uint64_t ord = q_ - 1;
            for (std::uint64_t f : detail::prime_factors(q_ - 1)) {
                while (ord % f == 0 && pow_structural(static_cast<Fe>(c), ord / f) == 1) ord /= f;
            }
            if (ord == q_ - 1) {
                alpha_ = static_cast<Fe>(c);
                return;
            }
        }
        throw consistency_error("no primitive element found");
    }

    static constexpr std::uint64_t kMaxSize = 1ull << 20;
    static constexpr std::uint64_t kLogTableMax = 1ull << 16;
    static constexpr std::uint64_t kAddTableMax = 1ull << 11;

    std::uint64_t p_ = 0;
    std::size_t m_ = 1;      // degree over base
    std::size_t abs_m_ = 1;  // degree over GF(p)
    std::uint64_t q_ = 0;
    FieldPtr base_;
    std::vector<Fe> modulus_;
    Fe alpha_ = 0;
    bool use_tables_ = true;

    std::vector<Fe> neg_tab_;
    std::vector<Fe> exp_tab_;
    std::vector<std::uint32_t> log_tab_;
    std::vector<Fe> add_tab_;
    const Fe* add_tab_ptr_ = nullptr;
};

// GF(p^m) over its prime field. The modulus is the first monic irreducible
// of degree m in the ascending coefficient-code order, and alpha is the
// smallest element code of multiplicative order q-1. Both scans are fixed,
// so repeated calls agree exactly.
inline FieldPtr build_field(std::uint64_t p, std::size_t m, bool use_tables = true) {
    if (!detail::is_prime_u64(p)) throw spec_parse_error("characteristic must be prime");
    if (m < 1) throw spec_parse_error("degree must be positive");
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < m; ++i) {
        q *= p;
        if (q > Field::kMaxSize) throw spec_parse_error("field size above 2^20 unsupported");
    }
    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = p;
    F->m_ = m;
    F->abs_m_ = m;
    F->q_ = q;
    F->use_tables_ = use_tables;
    if (m == 1) {
        F->modulus_ = {0, 1};  // formal modulus y for uniform reporting
    } else {
        F->base_ = build_field(p, 1, use_tables);
        // scan monic f = y^m + c_(m-1) y^(m-1) + ... + c_0 by ascending code
        bool found = false;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < m; ++i) combos *= p;
        for (std::uint64_t code = 0; code < combos && !found; ++code) {
            detail::PPoly f(m + 1);
            std::uint64_t x = code;
            for (std::size_t i = 0; i < m; ++i) {
                f[i] = x % p;
                x /= p;
            }
            f[m] = 1;
            if (detail::ppoly_irreducible(f, p)) {
                F->modulus_.resize(m + 1);
                for (std::size_t i = 0; i <= m; ++i) F->modulus_[i] = static_cast<Fe>(f[i]);
                found = true;
            }
        }
        if (!found) throw consistency_error("no irreducible modulus found");
    }
    F->find_alpha();
    if (use_tables && q <= Field::kLogTableMax) F->build_tables();
    return F;
}

// GF(q^2) as a tower over an existing GF(q). Modulus scan runs over monic
// quadratics y^2 + c1 y + c0 by ascending (c0, c1) code; irreducibility of
// a quadratic is the absence of a root in the base field.
inline FieldPtr build_quadratic_extension(const FieldPtr& base, bool use_tables = true) {
    if (!base) throw spec_parse_error("null base field");
    const std::uint64_t q = base->size();
    if (q * q > Field::kMaxSize) throw spec_parse_error("field size above 2^20 unsupported");
    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = base->characteristic();
    F->m_ = 2;
    F->abs_m_ = base->abs_degree() * 2;
    F->q_ = q * q;
    F->base_ = base;
    F->use_tables_ = use_tables;
    bool found = false;
    for (std::uint64_t code = 0; code < q * q && !found; ++code) {
        const Fe c0 = static_cast<Fe>(code % q);
        const Fe c1 = static_cast<Fe>(code / q);
        bool has_root = false;
        for (std::uint64_t e = 0; e < q && !has_root; ++e) {
            // e^2 + c1 e + c0
            const Fe ee = base->mul(static_cast<Fe>(e), static_cast<Fe>(e));
            const Fe v = base->add(base->add(ee, base->mul(c1, static_cast<Fe>(e))), c0);
            has_root = (v == 0);
        }
        if (!has_root) {
            F->modulus_ = {c0, c1, 1};
            found = true;
        }
    }
    if (!found) throw consistency_error("no irreducible quadratic found");
    F->find_alpha();
    if (use_tables && F->q_ <= Field::kLogTableMax) F->build_tables();
    return F;
}

// x -> x^|base|, the base-field Frobenius of an extension.
inline Fe frobenius_q(const Field& ext, Fe x) {
    if (ext.is_prime_field()) throw field_mismatch("frobenius needs an extension");
    return ext.pow(x, static_cast<std::int64_t>(ext.base_size()));
}

// Relative trace onto the direct base field; the result is returned as a
// base-field code (checked).
inline Fe trace_rel(const Field& ext, Fe x) {
    if (ext.is_prime_field()) throw field_mismatch("trace needs an extension");
    const std::uint64_t bq = ext.base_size();
    Fe acc = 0, t = x;
    for (std::size_t i = 0; i < ext.degree(); ++i) {
        acc = ext.add(acc, t);
        t = ext.pow(t, static_cast<std::int64_t>(bq));
    }
    return ext.project(*ext.base(), acc);
}

// Absolute trace onto GF(p), returned as a residue below p.
inline Fe trace_abs(const Field& f, Fe x) {
    Fe acc = 0, t = x;
    for (std::size_t i = 0; i < f.abs_degree(); ++i) {
        acc = f.add(acc, t);
        t = f.pow(t, static_cast<std::int64_t>(f.characteristic()));
    }
    if (acc >= f.characteristic()) throw consistency_error("trace landed outside prime subfield");
    return acc;
}

// The cyclic group of n-th roots of unity in ext, listed as powers
// gamma^0, gamma^1, ..., gamma^(n-1) of the canonical generator
// gamma = alpha^(-(|ext|-1)/n). Requires n | |ext|-1.
inline std::vector<Fe> unit_roots(const Field& ext, std::uint64_t n) {
    const std::uint64_t order = ext.size() - 1;
    if (n == 0 || order % n != 0) throw spec_parse_error("n must divide |field|-1");
    const Fe gamma = ext.inv(ext.pow(ext.alpha(), static_cast<std::int64_t>(order / n)));
    std::vector<Fe> roots(n);
    Fe g = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        roots[i] = g;
        g = ext.mul(g, gamma);
    }
    if (ext.mul(roots[n - 1], gamma) != 1) throw consistency_error("unit root cycle did not close");
    return roots;
}

}  // namespace nmds
