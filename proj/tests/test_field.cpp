#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "nmds/field.hpp"
#include "testutil.hpp"

using namespace nmds;

namespace {

// Full axiom sweep. Quadratic cost, so keep it to small fields.
void check_axioms(const Field& F) {
    const std::uint64_t q = F.size();
    for (Fe a = 0; a < q; ++a) {
        CHECK(F.add(a, 0) == a);
        CHECK(F.mul(a, 1) == a);
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a != 0) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, static_cast<std::int64_t>(q - 1)) == 1);
            CHECK(F.pow(a, -1) == F.inv(a));
        }
        for (Fe b = 0; b < q; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            for (Fe c = 0; c < q; ++c) {
                CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.mult_order(F.alpha()) == q - 1);
    CHECK_THROWS_AS(F.inv(0), division_by_zero);
}

}  // namespace

TEST_CASE("prime fields satisfy the axioms") {
    for (std::uint64_t p : {2, 3, 5, 7, 13}) check_axioms(*build_field(p, 1));
}

TEST_CASE("extension fields satisfy the axioms") {
    check_axioms(*build_field(2, 4));
    check_axioms(*build_field(3, 2));
    check_axioms(*build_field(5, 2));
}

TEST_CASE("modulus scan is deterministic and minimal") {
    // First irreducible by ascending coefficient code, constant term first.
    CHECK(build_field(2, 2)->modulus() == std::vector<Fe>({1, 1, 1}));
    CHECK(build_field(2, 3)->modulus() == std::vector<Fe>({1, 1, 0, 1}));
    CHECK(build_field(3, 2)->modulus() == std::vector<Fe>({1, 0, 1}));
    CHECK(build_field(3, 1)->modulus() == std::vector<Fe>({0, 1}));
    CHECK(build_field(3, 2)->alpha() == 4);
}

TEST_CASE("tables and direct arithmetic agree") {
    const FieldPtr with = build_field(3, 3, true);
    const FieldPtr without = build_field(3, 3, false);
    CHECK(with->tables_enabled());
    CHECK_FALSE(without->tables_enabled());
    for (Fe a = 0; a < 27; ++a)
        for (Fe b = 0; b < 27; ++b) {
            CHECK(with->add(a, b) == without->add(a, b));
            CHECK(with->mul(a, b) == without->mul(a, b));
            if (b != 0) CHECK(with->div(a, b) == without->div(a, b));
        }
}

TEST_CASE("quadratic towers embed the base field by code identity") {
    const FieldPtr base = build_field(3, 2);
    const FieldPtr ext = build_quadratic_extension(base);
    CHECK(ext->size() == 81);
    CHECK(ext->degree() == 2);
    CHECK(ext->abs_degree() == 4);
    CHECK(ext->contains(*base));
    for (Fe x = 0; x < 9; ++x) {
        CHECK(ext->embed(*base, x) == x);
        CHECK(ext->in_subfield(*base, x));
        CHECK(ext->project(*base, ext->embed(*base, x)) == x);
        // base arithmetic must be the restriction of tower arithmetic
        for (Fe y = 0; y < 9; ++y) {
            CHECK(ext->add(x, y) == base->add(x, y));
            CHECK(ext->mul(x, y) == base->mul(x, y));
        }
    }
    CHECK_FALSE(ext->in_subfield(*base, 9));
}

TEST_CASE("frobenius fixes exactly the base field") {
    const FieldPtr base = build_field(2, 2);
    const FieldPtr ext = build_quadratic_extension(base);
    std::size_t fixed = 0;
    for (Fe x = 0; x < ext->size(); ++x) {
        const Fe fx = frobenius_q(*ext, x);
        CHECK(frobenius_q(*ext, fx) == x);
        if (fx == x) {
            ++fixed;
            CHECK(ext->in_subfield(*base, x));
        }
    }
    CHECK(fixed == base->size());
}

TEST_CASE("relative trace is base-valued, surjective, and additive") {
    const FieldPtr base = build_field(3, 1);
    const FieldPtr ext = build_field(3, 2);
    std::set<Fe> image;
    for (Fe x = 0; x < 9; ++x) {
        const Fe t = trace_rel(*ext, x);
        CHECK(t < 3);
        image.insert(t);
        for (Fe y = 0; y < 9; ++y)
            CHECK(trace_rel(*ext, ext->add(x, y)) == base->add(trace_rel(*ext, x), trace_rel(*ext, y)));
    }
    CHECK(image.size() == 3);
}

TEST_CASE("absolute trace agrees with iterated relative trace on a tower") {
    const FieldPtr base = build_field(2, 2);
    const FieldPtr ext = build_quadratic_extension(base);
    for (Fe x = 0; x < ext->size(); ++x)
        CHECK(trace_abs(*ext, x) == trace_abs(*base, trace_rel(*ext, x)));
}

TEST_CASE("abs_coeffs flattens towers to prime-field vectors") {
    const FieldPtr ext = build_quadratic_extension(build_field(3, 2));
    for (Fe x = 0; x < ext->size(); ++x) {
        const std::vector<Fe> v = ext->abs_coeffs(x);
        REQUIRE(v.size() == 4);
        for (Fe c : v) CHECK(c < 3);
    }
    // linearity over GF(3)
    const auto add_vec = [](std::vector<Fe> a, const std::vector<Fe>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<Fe>((a[i] + b[i]) % 3);
        return a;
    };
    testutil::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const Fe x = static_cast<Fe>(rng.below(81));
        const Fe y = static_cast<Fe>(rng.below(81));
        CHECK(ext->abs_coeffs(ext->add(x, y)) == add_vec(ext->abs_coeffs(x), ext->abs_coeffs(y)));
    }
}

TEST_CASE("unit circle of the quadratic tower") {
    const FieldPtr base = build_field(3, 2);
    const FieldPtr ext = build_quadratic_extension(base);
    const std::vector<Fe> u = unit_roots(*ext, 10);
    REQUIRE(u.size() == 10);
    CHECK(u[0] == 1);
    std::set<Fe> seen(u.begin(), u.end());
    CHECK(seen.size() == 10);
    for (Fe x : u) {
        CHECK(ext->pow(x, 10) == 1);
        // norm over the base is 1 exactly on the circle
        CHECK(ext->mul(x, frobenius_q(*ext, x)) == 1);
        // nontrivial circle elements lie outside the base field
        if (x != 1 && ext->pow(x, 2) != 1) CHECK_FALSE(ext->in_subfield(*base, x));
    }
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(build_field(4, 1), spec_parse_error);
    CHECK_THROWS_AS(build_field(6, 2), spec_parse_error);
    CHECK_THROWS_AS(build_field(2, 25), spec_parse_error);  // over the size cap
}

TEST_CASE("cross-field element use is rejected") {
    const FieldPtr a = build_field(3, 1);
    const FieldPtr b = build_field(5, 1);
    CHECK_FALSE(a->same_field(*b));
    CHECK(a->same_field(*build_field(3, 1)));
}
