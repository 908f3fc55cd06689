#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "nmds/design.hpp"
#include "nmds/combinatorics.hpp"

using namespace nmds;

namespace {

Design fano() {
    Design d;
    d.v = 7;
    d.k = 3;
    d.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    std::sort(d.blocks.begin(), d.blocks.end());
    validate_design(d);
    return d;
}

}  // namespace

TEST_CASE("design validation rejects malformed input") {
    Design d;
    d.v = 4;
    d.k = 2;
    d.blocks = {{1, 0}};
    CHECK_THROWS_AS(validate_design(d), consistency_error);  // unsorted block
    d.blocks = {{0, 4}};
    CHECK_THROWS_AS(validate_design(d), consistency_error);  // point out of range
    d.blocks = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(validate_design(d), consistency_error);  // duplicate block
    d.blocks = {{0, 1, 2}};
    CHECK_THROWS_AS(validate_design(d), consistency_error);  // wrong block size
}

TEST_CASE("the Fano plane verifies as a Steiner triple system") {
    const Design d = fano();
    const DesignCheck chk2 = verify_t_design(d, 2);
    CHECK(chk2.is_t_design);
    CHECK(chk2.lambda == 1);
    CHECK(steiner_check(chk2));
    const DesignCheck chk1 = verify_t_design(d, 1);
    CHECK(chk1.is_t_design);
    CHECK(chk1.lambda == 3);
    CHECK(lambda_s(2, 7, 3, BigInt(1), 1) == 3);
    CHECK(lambda_s(2, 7, 3, BigInt(1), 0) == 7);  // block count
    const Design comp = complementary_design(d);
    CHECK(comp.k == 4);
    const DesignCheck chkc = verify_t_design(comp, 2);
    CHECK(chkc.is_t_design);
    CHECK(chkc.lambda == 2);
    CHECK(same_design(complementary_design(comp), d));
}

TEST_CASE("non-designs produce a deterministic counterexample") {
    Design d;
    d.v = 4;
    d.k = 3;
    d.blocks = {{0, 1, 2}, {0, 1, 3}};
    const DesignCheck chk = verify_t_design(d, 2);
    CHECK_FALSE(chk.is_t_design);
    REQUIRE(chk.counterexample.has_value());
    CHECK(chk.counterexample->first == std::vector<std::uint32_t>({2, 3}));   // covered 0 times
    CHECK(chk.counterexample->second == std::vector<std::uint32_t>({0, 1}));  // covered twice
    CHECK_THROWS_AS(verify_t_design(d, 5), spec_parse_error);
}

TEST_CASE("lambda interpolation demands exact division") {
    CHECK_THROWS_AS(lambda_s(2, 6, 4, BigInt(1), 1), consistency_error);
}

TEST_CASE("colex rank and unrank are inverse") {
    for (std::uint64_t r = 0; r < 120; ++r) {
        const std::vector<std::uint32_t> s = colex_unrank(r, 3);
        CHECK(colex_rank(s) == r);
    }
}

TEST_CASE("elementary symmetric oracles on hand-checked values") {
    const FieldPtr F = build_field(5, 1);
    CHECK(e2_triple(*F, 2, 3, 4) == 1);      // 26 mod 5
    CHECK(e2_quad(*F, 1, 2, 3, 4) == 0);     // e2 of all units: x^4 - 1 has no x^2 term
}

TEST_CASE("determinant identities hold exhaustively over small fields") {
    const FieldPtr F5 = build_field(5, 1);
    for (Fe x = 1; x < 5; ++x)
        for (Fe y = 1; y < 5; ++y)
            for (Fe z = 1; z < 5; ++z) {
                const auto [lhs, rhs] = det_identity_oracle3(*F5, x, y, z);
                CHECK(lhs == rhs);
                if (x == y) CHECK(lhs == 0);
            }
    const FieldPtr F8 = build_field(2, 3);
    for (Fe x = 1; x < 8; ++x)
        for (Fe y = 1; y < 8; ++y)
            for (Fe z = 1; z < 8; ++z)
                for (Fe w = 1; w < 8; ++w) {
                    const auto [lhs, rhs] = det_identity_oracle4(*F8, x, y, z, w);
                    CHECK(lhs == rhs);
                    if (x == w) CHECK(lhs == 0);
                }
}

TEST_CASE("characteristic-3 triples complete uniquely into the quadruple system") {
    const FieldPtr F = build_field(3, 2);
    const FieldPtr ext = build_quadratic_extension(F);
    const std::vector<Fe> roots = unit_roots(*ext, 10);
    std::map<Fe, std::uint32_t> label;
    for (std::uint32_t i = 0; i < roots.size(); ++i) label[roots[i]] = i;
    const Design sqs = sqs_direct(F);
    const std::set<std::vector<std::uint32_t>> blocks(sqs.blocks.begin(), sqs.blocks.end());
    std::vector<std::uint32_t> tri;
    first_subset(tri, 10, 3);
    std::size_t completions = 0;
    do {
        const auto w = complete_quadruple(*ext, QuadrupleCase::Char3, roots[tri[0]],
                                          roots[tri[1]], roots[tri[2]]);
        REQUIRE(w.has_value());
        std::vector<std::uint32_t> quad = {tri[0], tri[1], tri[2], label.at(*w)};
        std::sort(quad.begin(), quad.end());
        CHECK(blocks.count(quad) == 1);
        ++completions;
    } while (next_subset(tri, 10));
    CHECK(completions == 120);          // every triple of binom(10,3)
    CHECK(blocks.size() * 4 == 120);    // each block absorbs four triples: Steiner
}

TEST_CASE("even-characteristic completion fails exactly off the block set") {
    const FieldPtr F = build_field(2, 4);
    const FieldPtr ext = build_quadratic_extension(F);
    const std::vector<Fe> roots = unit_roots(*ext, 17);
    std::map<Fe, std::uint32_t> label;
    for (std::uint32_t i = 0; i < roots.size(); ++i) label[roots[i]] = i;
    const Design sqs = sqs_direct(F);
    const std::set<std::vector<std::uint32_t>> blocks(sqs.blocks.begin(), sqs.blocks.end());
    std::set<std::vector<std::uint32_t>> covered;  // triples inside some block
    for (const auto& b : sqs.blocks)
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::vector<std::uint32_t> t;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != skip) t.push_back(b[i]);
            covered.insert(t);
        }
    std::vector<std::uint32_t> tri;
    first_subset(tri, 17, 3);
    std::size_t ok = 0, fail = 0;
    do {
        const auto w = complete_quadruple(*ext, QuadrupleCase::Char2Even, roots[tri[0]],
                                          roots[tri[1]], roots[tri[2]]);
        if (w) {
            std::vector<std::uint32_t> quad = {tri[0], tri[1], tri[2], label.at(*w)};
            std::sort(quad.begin(), quad.end());
            CHECK(blocks.count(quad) == 1);
            CHECK(covered.count(tri) == 1);
            ++ok;
        } else {
            CHECK(covered.count(tri) == 0);
            ++fail;
        }
    } while (next_subset(tri, 17));
    CHECK(ok == 4 * blocks.size());
    CHECK(ok + fail == 680);  // binom(17,3)
}

TEST_CASE("quadruple completion rejects bad input") {
    const FieldPtr F9 = build_field(3, 2);
    const FieldPtr ext = build_quadratic_extension(F9);
    const std::vector<Fe> u = unit_roots(*ext, 10);
    CHECK_THROWS_AS(complete_quadruple(*ext, QuadrupleCase::Char3, u[1], u[1], u[2]),
                    spec_parse_error);
    CHECK_THROWS_AS(complete_quadruple(*ext, QuadrupleCase::Char3, 0, u[1], u[2]),
                    spec_parse_error);
    CHECK_THROWS_AS(complete_quadruple(*ext, QuadrupleCase::Char2Even, u[1], u[2], u[3]),
                    spec_parse_error);
    CHECK_THROWS_AS(complete_quadruple(*build_field(3, 1), QuadrupleCase::Char3, 1, 2, 1),
                    field_mismatch);
}

TEST_CASE("direct quadruple construction is restricted to the two families") {
    CHECK_THROWS_AS(sqs_direct(build_field(2, 2)), spec_parse_error);   // s = 2
    CHECK_THROWS_AS(sqs_direct(build_field(2, 5)), spec_parse_error);   // s odd
    CHECK_THROWS_AS(sqs_direct(build_field(5, 1)), spec_parse_error);   // wrong characteristic
}
