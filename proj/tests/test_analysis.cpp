#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "nmds/analysis.hpp"
#include "nmds/design.hpp"
#include "nmds/report.hpp"
#include "testutil.hpp"

using namespace nmds;

TEST_CASE("classification of the Golay family") {
    const LinearCode g = golay11();
    const LinearCode gd = dual(g);
    const NmdsReport primal = classify(g, gd, 5, 6);
    CHECK(primal.classification == CodeClass::NMDS);
    CHECK(primal.defect == 1);
    CHECK(primal.defect_dual == 1);
    CHECK(primal.extremality == Extremality::AlmostExtremal);  // n + 1 = 2q + k
    const NmdsReport dual_view = classify(gd, g, 6, 5);
    CHECK(dual_view.classification == CodeClass::NMDS);
    CHECK(dual_view.extremality == Extremality::Extremal);  // n = 2q + k
    const LinearCode e = extend(g);
    const NmdsReport ext_view = classify(e, dual(e), 6, 6);
    CHECK(ext_view.classification == CodeClass::NMDS);
    CHECK(ext_view.extremality == Extremality::Extremal);
}

TEST_CASE("classification recognizes MDS and rejects a mismatched pair") {
    const FieldPtr F = build_field(3, 1);
    Mat g(F, 2, 4);
    const Fe rows[2][4] = {{1, 0, 1, 1}, {0, 1, 1, 2}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) g.at(i, j) = rows[i][j];
    const LinearCode c = LinearCode::from_generator_matrix(std::move(g), "tetracode");
    const LinearCode d = dual(c);
    const MinDistance md = min_distance(c);
    REQUIRE(md.d.has_value());
    CHECK(*md.d == 3);
    CHECK(classify(c, d, 3, 3).classification == CodeClass::MDS);
    const LinearCode gol = golay11();
    CHECK_THROWS_AS(classify(gol, gol, 5, 5), consistency_error);  // 6 + 6 != 11
}

TEST_CASE("weight formulas reproduce the Golay pair from its minimum count") {
    const LinearCode g = golay11();
    const WeightDistribution wc = weight_distribution_enum(g);
    const WeightDistribution wd = weight_distribution_enum(dual(g));
    const auto [closed_primal, closed_dual] = nmds_weight_formulas(11, 6, 3, wc.counts[5]);
    CHECK(closed_primal.counts == wc.counts);
    CHECK(closed_dual.counts == wd.counts);
    CHECK_THROWS_AS(nmds_weight_formulas(11, 0, 3, BigInt(1)), spec_parse_error);
}

TEST_CASE("minimum count bound is tight on the dual side for the Golay code") {
    const auto [primal_bound, dual_bound] = a_min_bound(11, 6, 3);
    CHECK(BigRat(132) <= primal_bound);
    CHECK(primal_bound == BigRat(154));
    CHECK(dual_bound == BigRat(132));  // attained: A_5 = 132
}

TEST_CASE("structure checks pass on an AMDS code") {
    const LinearCode g = golay11();
    const auto checks = amds_structure_checks(g, 5, 6);
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].verdict == "pass");   // 11 <= 6 + 2*3
    CHECK(checks[1].verdict == "pass");   // n - k = 5 > q = 3, dual distance equals k
    CHECK(checks[2].verdict == "pass");   // weights 5 and 6 generate
}

TEST_CASE("minimum-weight supports pair off disjointly") {
    const LinearCode g = golay11();
    const LinearCode gd = dual(g);
    const PairingTable pt = min_weight_pairing(g, gd);
    REQUIRE(pt.supports.size() == 66);
    REQUIRE(pt.dual_supports.size() == 66);
    std::vector<bool> hit(pt.dual_supports.size(), false);
    for (std::size_t i = 0; i < pt.supports.size(); ++i) {
        const std::size_t j = pt.pair_of[i];
        REQUIRE(j < pt.dual_supports.size());
        CHECK_FALSE(hit[j]);
        hit[j] = true;
        std::vector<std::uint32_t> meet;
        std::set_intersection(pt.supports[i].begin(), pt.supports[i].end(),
                              pt.dual_supports[j].begin(), pt.dual_supports[j].end(),
                              std::back_inserter(meet));
        CHECK(meet.empty());
    }
}

TEST_CASE("vanishing weights predict dual designs that then verify") {
    const LinearCode g = golay11();
    const LinearCode gd = dual(g);
    const WeightDistribution wc = weight_distribution_enum(g);
    const WeightDistribution wd = weight_distribution_enum(gd);
    const NmdsReport rep = classify(g, gd, 5, 6);
    const auto preds = dldesign_predict(rep, wc, wd);
    REQUIRE(preds.size() == 2);  // A_7 = 0 and A_10 = 0
    CHECK(preds[0].weight == 6);
    CHECK(preds[0].t == 4);
    CHECK(preds[0].s == 2);
    CHECK(preds[1].t == 1);
    // the strongest prediction: weight-6 dual supports form a 4-design
    const Design d6 = support_design(gd, 6);
    const DesignCheck chk = verify_t_design(d6, 4);
    CHECK(chk.is_t_design);
    CHECK(chk.lambda == 3);
}
