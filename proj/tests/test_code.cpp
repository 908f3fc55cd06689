#include <catch2/catch_amalgamated.hpp>

#include "nmds/code.hpp"
#include "nmds/report.hpp"
#include "testutil.hpp"

using namespace nmds;

namespace {

std::vector<Fe> rotate_right(const std::vector<Fe>& v) {
    std::vector<Fe> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[(i + 1) % v.size()] = v[i];
    return out;
}

std::vector<Fe> gen_row(const LinearCode& c, std::size_t i) {
    std::vector<Fe> out(c.length());
    for (std::size_t j = 0; j < c.length(); ++j) out[j] = c.gen().at(i, j);
    return out;
}

}  // namespace

TEST_CASE("generator and parity rows are orthogonal on random codes") {
    testutil::Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const FieldPtr F = build_field(trial % 2 ? 3 : 5, 1);
        const LinearCode c = testutil::random_code(F, 1 + rng.below(5), 4 + rng.below(5), rng);
        REQUIRE(c.gen().rows() + c.parity().rows() == c.length());
        for (std::size_t i = 0; i < c.dimension(); ++i) CHECK(code_contains(c, gen_row(c, i)));
        const LinearCode d = dual(c);
        CHECK(d.dimension() == c.length() - c.dimension());
        CHECK(same_code(dual(d), c));
    }
}

TEST_CASE("cyclic construction: generator polynomial properties") {
    const LinearCode g = golay11();
    REQUIRE(g.gen_poly().has_value());
    CHECK(g.gen_poly()->deg() == 5);
    CHECK(g.length() == 11);
    CHECK(g.dimension() == 6);
    // rotation invariance of the full code
    for (std::size_t i = 0; i < g.dimension(); ++i)
        CHECK(code_contains(g, rotate_right(gen_row(g, i))));
    // generator polynomial divides x^n - 1
    const auto [q, r] = poly_divmod(poly_xn_minus_1(g.field(), 11), *g.gen_poly());
    CHECK(r.is_zero());
}

TEST_CASE("from_generator_poly rejects a non-divisor") {
    const FieldPtr F = build_field(3, 1);
    const Poly bad(F, {1, 1, 1});  // x^2+x+1 does not divide x^11-1 over GF(3)
    CHECK_THROWS_AS(LinearCode::from_generator_poly(bad, 11), spec_parse_error);
}

TEST_CASE("bch degenerates to the zero-dimensional code when all roots are required") {
    const LinearCode c = bch({build_field(2, 1), 3, 3, 0});
    CHECK(c.dimension() == 0);
    const WeightDistribution wd = weight_distribution_enum(c);
    REQUIRE(wd.counts.size() == 4);
    CHECK(wd.counts[0] == 1);
    CHECK(wd.total() == 1);
}

TEST_CASE("optimized enumerator matches a naive odometer") {
    testutil::Rng rng(22);
    for (int trial = 0; trial < 12; ++trial) {
        const FieldPtr F = build_field(trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 7), 1);
        const LinearCode c = testutil::random_code(F, 1 + rng.below(4), 5 + rng.below(4), rng);
        const WeightDistribution fast = weight_distribution_enum(c, kDefaultBudget, 3);
        const WeightDistribution slow = testutil::naive_weight_distribution(c);
        CHECK(fast.counts == slow.counts);
    }
    // and on a field tower
    const LinearCode c9 = bch({build_field(3, 2), 10, 3, 1});
    const LinearCode d9 = dual(c9);
    CHECK(weight_distribution_enum(d9).counts == testutil::naive_weight_distribution(d9).counts);
}

TEST_CASE("enumeration budget is enforced") {
    const LinearCode c = bch({build_field(3, 2), 10, 3, 1});
    CHECK_THROWS_AS(weight_distribution_enum(c, 1000, 1), budget_exceeded);
    CHECK(enum_cost(81, 78) == ~0ull);  // saturates instead of overflowing
}

TEST_CASE("macwilliams transform inverts across the dual pair") {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const FieldPtr F = build_field(trial % 2 ? 2 : 3, trial % 2 ? 2 : 1);
        const LinearCode c = testutil::random_code(F, 2 + rng.below(3), 5 + rng.below(4), rng);
        if (c.dimension() == 0 || c.dimension() == c.length()) continue;
        const LinearCode d = dual(c);
        const WeightDistribution wc = weight_distribution_enum(c);
        const WeightDistribution wdd = weight_distribution_enum(d);
        CHECK(macwilliams_transform(wc, c.length(), c.dimension(), F->size()).counts ==
              wdd.counts);
        CHECK(macwilliams_transform(wdd, c.length(), d.dimension(), F->size()).counts ==
              wc.counts);
    }
}

TEST_CASE("extending the ternary Golay gives the self-dual [12,6,6] code") {
    const LinearCode e = extend(golay11());
    CHECK(e.length() == 12);
    CHECK(e.dimension() == 6);
    const WeightDistribution wd = weight_distribution_enum(e);
    CHECK(wd.counts == testutil::naive_weight_distribution(e).counts);
    CHECK(same_code(dual(e), e));
    const MinDistance md = min_distance(e);
    REQUIRE(md.d.has_value());
    CHECK(*md.d == 6);
}

TEST_CASE("lifting embeds the original codewords") {
    const LinearCode g = golay11();
    const FieldPtr ext = build_field(3, 2);
    const LinearCode lifted = lift(g, ext);
    CHECK(lifted.dimension() == g.dimension());
    for (std::size_t i = 0; i < g.dimension(); ++i) {
        std::vector<Fe> row = gen_row(g, i);
        for (Fe& x : row) x = ext->embed(*g.field(), x);
        CHECK(code_contains(lifted, row));
    }
}

TEST_CASE("subfield subcode words are exactly the subfield-valued codewords") {
    const LinearCode c = bch({build_field(3, 2), 10, 3, 1});
    const FieldPtr sub = build_field(3, 1);
    const LinearCode t = subfield_subcode(c, sub);
    CHECK(t.length() == 10);
    CHECK(t.dimension() == 2);
    // every subcode generator row is a codeword of the big code
    for (std::size_t i = 0; i < t.dimension(); ++i) {
        std::vector<Fe> row = gen_row(t, i);
        for (Fe& x : row) x = c.field()->embed(*sub, x);
        CHECK(code_contains(c, row));
    }
}

TEST_CASE("binary subcode duals match the closed-form parameters") {
    // [2^s+1, 2s, 2^(s-1) - 2^(s/2) + 2] for even s: s = 4 and s = 6
    for (const std::size_t s : {std::size_t(4), std::size_t(6)}) {
        const LinearCode c = bch({build_field(2, s), (1u << s) + 1, 3, 1});
        const LinearCode z = subfield_subcode(c, build_field(2, 1));
        const LinearCode zd = dual(z);
        CHECK(zd.length() == (1u << s) + 1);
        CHECK(zd.dimension() == 2 * s);
        const WeightDistribution wd = weight_distribution_enum(zd);
        std::size_t d = 0;
        for (std::size_t i = 1; i < wd.counts.size() && d == 0; ++i)
            if (wd.counts[i] != 0) d = i;
        CHECK(d == (1u << (s - 1)) - (1u << (s / 2)) + 2);
    }
}

TEST_CASE("dual of the subfield subcode is the trace code of the dual") {
    for (const auto& [p, m, n] : std::vector<std::tuple<std::uint64_t, std::size_t, std::uint64_t>>{
             {3, 2, 10}, {2, 4, 17}}) {
        const LinearCode c = bch({build_field(p, m), n, 3, 1});
        const FieldPtr sub = build_field(p, 1);
        CHECK(same_code(dual(subfield_subcode(c, sub)), trace_code(dual(c), sub)));
    }
}

TEST_CASE("minimum distance search returns a verified witness") {
    const LinearCode g = golay11();
    const MinDistance md = min_distance(g);
    REQUIRE(md.d.has_value());
    CHECK(*md.d == 5);
    REQUIRE(md.witness_support.size() == 5);
    std::size_t wt = 0;
    for (Fe x : md.witness_word) wt += x != 0;
    CHECK(wt == 5);
    CHECK(code_contains(g, md.witness_word));
}

TEST_CASE("minimum distance respects its budget and reports the bound") {
    const LinearCode c = bch({build_field(2, 4), 17, 3, 1});
    const MinDistance bounded = min_distance(c, 0, 20);
    CHECK_FALSE(bounded.d.has_value());
    CHECK(bounded.searched_up_to >= 1);
    const MinDistance full = min_distance(c);
    REQUIRE(full.d.has_value());
    CHECK(*full.d == 4);
}

TEST_CASE("low-weight search routes agree word for word") {
    const LinearCode g = golay11();
    const auto via_messages = low_weight_words(g, 5, kDefaultBudget, 2, SearchRoute::Messages);
    const auto via_subsets = low_weight_words(g, 5, kDefaultBudget, 2, SearchRoute::Subsets);
    REQUIRE(via_messages.size() == 66);  // 132 weight-5 words, two per projective class
    REQUIRE(via_messages.size() == via_subsets.size());
    for (std::size_t i = 0; i < via_messages.size(); ++i) {
        CHECK(via_messages[i].support == via_subsets[i].support);
        CHECK(via_messages[i].word == via_subsets[i].word);
        CHECK(code_contains(g, via_messages[i].word));
    }
    CHECK(low_weight_words(g, 4).empty());  // below the distance
}

TEST_CASE("sphere packing bound recognizes the perfect Golay code") {
    const SpherePacking golay = sphere_packing_check(11, 6, 5, 3);
    CHECK(golay.admissible);
    CHECK(golay.k_max == 6);
    const SpherePacking too_big = sphere_packing_check(5, 3, 4, 2);
    CHECK_FALSE(too_big.admissible);
    CHECK(too_big.k_max == 2);
}

TEST_CASE("code spec strings build the advertised codes") {
    const LinearCode c = build_code_from_spec("bch:q=3^2,n=10,delta=3,h=1");
    CHECK(c.length() == 10);
    CHECK(c.dimension() == 6);
    const LinearCode z = build_code_from_spec("subfield:2:bch:q=2^4,n=17,delta=3,h=1");
    CHECK(z.length() == 17);
    CHECK(z.dimension() == 9);
    const LinearCode dd = build_code_from_spec("dual:bch:q=3^2,n=10,delta=3,h=1");
    CHECK(dd.dimension() == 4);
    const LinearCode ee = build_code_from_spec("extend:bch:q=3^2,n=10,delta=3,h=1");
    CHECK(ee.length() == 11);
    const LinearCode lf = build_code_from_spec("lift:3^2:bch:q=3,n=11,delta=2,h=1");
    CHECK(lf.field()->size() == 9);
    CHECK_THROWS_AS(build_code_from_spec("bch:q=3^2,n=10,delta=3"), spec_parse_error);
    CHECK_THROWS_AS(build_code_from_spec("rot13:bch:q=3,n=11,delta=2,h=1"), spec_parse_error);
    CHECK_THROWS_AS(build_code_from_spec("bch:q=6,n=10,delta=3,h=1"), spec_parse_error);
}
