#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nmds/analysis.hpp"
#include "nmds/code.hpp"
#include "nmds/codespec.hpp"
#include "nmds/design.hpp"
#include "nmds/json_io.hpp"

namespace nmds {

// One verification item of the reproduction report: a named claim, its
// verdict, and the computed-versus-expected evidence. Wall time is kept
// out of the JSON serialization so reports stay byte-identical.
struct Criterion {
    std::string id;
    std::string name;
    bool pass = true;
    double seconds = 0.0;
    double limit_seconds = 0.0;
    std::vector<std::string> failures;
    json details = json::object();

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            failures.push_back(what);
        }
    }
};

struct ReportOptions {
    std::uint64_t budget = kDefaultBudget;
    std::size_t workers = 1;
    bool long_tests = false;
};

namespace report_detail {

inline WeightDistribution make_wd(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::uint64_t>>& nz) {
    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    wd.counts[0] = 1;
    for (const auto& [w, c] : nz) wd.counts[w] = c;
    return wd;
}

inline std::string wd_brief(const WeightDistribution& wd) {
    std::string s;
    for (std::size_t i = 1; i < wd.counts.size(); ++i) {
        if (wd.counts[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += "A" + std::to_string(i) + "=" + wd.counts[i].str();
    }
    return s.empty() ? "A0=1 only" : s;
}

inline std::size_t first_nonzero_weight(const WeightDistribution& wd) {
    for (std::size_t i = 1; i < wd.counts.size(); ++i)
        if (wd.counts[i] != 0) return i;
    return 0;
}

// splitmix64: tiny deterministic generator for the property suites, so
// "random" inputs are identical on every platform and run.
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace report_detail

// The ternary Golay code in its cyclic presentation: delta = 2 makes the
// generator a single minimal polynomial.
inline LinearCode golay11(bool use_tables = true) {
    return bch({build_field(3, 1, use_tables), 11, 2, 1}, use_tables);
}

namespace report_detail {

inline void run_c01(Criterion& c, const ReportOptions& o) {
    const LinearCode g = golay11();
    const WeightDistribution wd = weight_distribution_enum(g, o.budget, o.workers);
    const WeightDistribution expected =
        make_wd(11, {{5, 132}, {6, 132}, {8, 330}, {9, 110}, {11, 24}});
    c.details["code"] = code_to_json(g);
    c.details["computed"] = weights_to_json(wd);
    c.details["expected"] = weights_to_json(expected);
    c.expect(g.length() == 11 && g.dimension() == 6, "parameters are [11,6]");
    c.expect(wd.counts == expected.counts, "weight enumerator matches");
}

inline void run_c02(Criterion& c, const ReportOptions& o) {
    const LinearCode g = golay11();
    const LinearCode lifted = lift(g, build_field(3, 2));
    const WeightDistribution wd = weight_distribution_enum(lifted, o.budget, o.workers);
    const WeightDistribution expected = make_wd(11, {{5, 528},
                                                     {6, 528},
                                                     {7, 15840},
                                                     {8, 40920},
                                                     {9, 129800},
                                                     {10, 198000},
                                                     {11, 145824}});
    c.details["code"] = code_to_json(lifted);
    c.details["computed"] = weights_to_json(wd);
    c.details["expected"] = weights_to_json(expected);
    c.expect(lifted.dimension() == 6, "lift preserves dimension");
    c.expect(wd.counts == expected.counts, "weight enumerator matches");
}

inline void run_c03(Criterion& c, const ReportOptions& o) {
    const LinearCode base = bch({build_field(3, 2), 10, 3, 1});
    const LinearCode ext = extend(base);
    const WeightDistribution wd = weight_distribution_enum(ext, o.budget, o.workers);
    const WeightDistribution expected = make_wd(11, {{5, 240},
                                                     {6, 2256},
                                                     {7, 11520},
                                                     {8, 46680},
                                                     {9, 125480},
                                                     {10, 199728},
                                                     {11, 145536}});
    c.details["code"] = code_to_json(ext);
    c.details["computed"] = weights_to_json(wd);
    c.details["expected"] = weights_to_json(expected);
    c.expect(wd.counts == expected.counts, "weight enumerator matches");
    const Design d5 = support_design(ext, 5, o.budget, o.workers);
    const DesignCheck chk = verify_t_design(d5, 1, o.budget, o.workers);
    c.details["weight5_check"] = design_check_to_json(chk);
    c.expect(!chk.is_t_design, "weight-5 supports are not a 1-design");
}

inline void run_c04(Criterion& c, const ReportOptions& o) {
    const std::vector<std::pair<std::uint64_t, std::vector<std::pair<std::size_t, std::uint64_t>>>>
        cases = {{9, {{6, 240}, {8, 2160}, {9, 2000}, {10, 2160}}},
                 {27, {{24, 21294}, {26, 147420}, {27, 171080}, {28, 191646}}}};
    for (const auto& [q, nz] : cases) {
        const std::string tag = "q" + std::to_string(q);
        const FieldPtr F = q == 9 ? build_field(3, 2) : build_field(3, 3);
        const LinearCode C = bch({F, q + 1, 3, 1});
        const LinearCode D = dual(C);
        const MinDistance md = min_distance(C, 0, o.budget);
        const WeightDistribution wdD = weight_distribution_enum(D, o.budget, o.workers);
        const std::size_t dD = first_nonzero_weight(wdD);
        const WeightDistribution expected = make_wd(q + 1, nz);
        const auto closed =
            nmds_weight_formulas(q + 1, q - 3, q, wdD.counts[q - 3]);
        c.details[tag]["code"] = code_to_json(C);
        c.details[tag]["d"] = md.d ? json(*md.d) : json();
        c.details[tag]["dual_distribution"] = weights_to_json(wdD);
        c.details[tag]["expected"] = weights_to_json(expected);
        c.expect(C.length() == q + 1 && C.dimension() == q - 3,
                 tag + " parameters [q+1, q-3]");
        c.expect(md.d && *md.d == 4, tag + " distance 4");
        c.expect(D.dimension() == 4 && dD == q - 3, tag + " dual parameters [q+1, 4, q-3]");
        c.expect(wdD.counts == expected.counts, tag + " dual distribution matches the fixture");
        c.expect(closed.second.counts == wdD.counts,
                 tag + " closed form matches the enumeration");
    }
}

inline void run_c05(Criterion& c, const ReportOptions& o) {
    const std::vector<std::tuple<std::uint64_t, std::size_t, std::uint64_t>> cases = {
        {9, 30, 5}, {27, 819, 506}};
    for (const auto& [q, blocks, lambda_comp] : cases) {
        const std::string tag = "q" + std::to_string(q);
        const FieldPtr F = q == 9 ? build_field(3, 2) : build_field(3, 3);
        const LinearCode C = bch({F, q + 1, 3, 1});
        const Design from_code = support_design(C, 4, o.budget, o.workers);
        const Design direct = sqs_direct(F);
        const DesignCheck chk = verify_t_design(from_code, 3, o.budget, o.workers);
        const Design comp = complementary_design(from_code);
        const DesignCheck chk_comp = verify_t_design(comp, 3, o.budget, o.workers);
        c.details[tag]["blocks"] = from_code.blocks.size();
        c.details[tag]["check"] = design_check_to_json(chk);
        c.details[tag]["complement_check"] = design_check_to_json(chk_comp);
        c.expect(same_design(from_code, direct), tag + " support design equals direct block set");
        c.expect(from_code.blocks.size() == blocks, tag + " block count");
        c.expect(chk.is_t_design && chk.lambda == 1, tag + " Steiner 3-design");
        c.expect(steiner_check(chk), tag + " Steiner check");
        c.expect(chk_comp.is_t_design && chk_comp.lambda == lambda_comp,
                 tag + " complementary design");
    }
}

inline void run_c06(Criterion& c, const ReportOptions& o) {
    const std::vector<std::tuple<std::uint64_t, std::size_t, std::uint64_t>> cases = {
        {9, 72, 6}, {27, 78624, 240}};
    for (const auto& [q, blocks, lambda] : cases) {
        const std::string tag = "q" + std::to_string(q);
        const FieldPtr F = q == 9 ? build_field(3, 2) : build_field(3, 3);
        const LinearCode C = bch({F, q + 1, 3, 1});
        const Design d5 = support_design(C, 5, o.budget, o.workers, SearchRoute::Subsets);
        const DesignCheck chk = verify_t_design(d5, 3, o.budget, o.workers);
        c.details[tag]["blocks"] = d5.blocks.size();
        c.details[tag]["check"] = design_check_to_json(chk);
        c.expect(d5.blocks.size() == blocks, tag + " block count");
        c.expect(chk.is_t_design && chk.lambda == lambda, tag + " 3-design with expected lambda");
    }
}

inline void run_c07(Criterion& c, const ReportOptions& o) {
    const FieldPtr F = build_field(2, 4);
    const LinearCode C = bch({F, 17, 3, 1});
    const LinearCode D = dual(C);
    const MinDistance md = min_distance(C, 0, o.budget);
    const std::vector<LowWeightWord> w4 = low_weight_words(C, 4, o.budget, o.workers);
    const BigInt A4 = BigInt(w4.size()) * 15;
    const WeightDistribution wdD = weight_distribution_enum(D, o.budget, o.workers);
    const WeightDistribution expected =
        make_wd(17, {{13, 2040}, {14, 2040}, {15, 16320}, {16, 22695}, {17, 22440}});
    const Design sd = support_design(C, 4, o.budget, o.workers);
    const DesignCheck chk = verify_t_design(sd, 2, o.budget, o.workers);
    const Design comp = complementary_design(sd);
    const DesignCheck chk_comp = verify_t_design(comp, 2, o.budget, o.workers);
    const WeightDistribution wdC = macwilliams_transform(wdD, 17, 4, 16);
    const AssmusMattson am = assmus_mattson(17, 16, 4, 13, wdC, wdD, 2);
    c.details["A4"] = big_to_json(A4);
    c.details["dual_distribution"] = weights_to_json(wdD);
    c.details["expected_dual"] = weights_to_json(expected);
    c.details["design_check"] = design_check_to_json(chk);
    c.details["complement_check"] = design_check_to_json(chk_comp);
    c.details["assmus_mattson"] = assmus_mattson_to_json(am);
    c.expect(md.d && *md.d == 4, "distance 4");
    c.expect(A4 == 2040, "A_4 = 2040");
    c.expect(wdD.counts == expected.counts, "dual distribution matches the fixture");
    c.expect(sd.blocks.size() == 136 && chk.is_t_design && chk.lambda == 6,
             "2-(17,4,6) with 136 blocks");
    c.expect(chk_comp.is_t_design && chk_comp.lambda == 78, "complement 2-(17,13,78)");
    c.expect(!am.applies, "Assmus-Mattson does not apply at t=2");
    c.expect(chk.is_t_design, "design verifies despite non-applicability");
}

inline void run_c08(Criterion& c, const ReportOptions& o) {
    const FieldPtr F = build_field(2, 3);
    const LinearCode C = bch({F, 9, 3, 1});
    const LinearCode D = dual(C);
    const MinDistance md = min_distance(C, 0, o.budget);
    const WeightDistribution wdD = weight_distribution_enum(D, o.budget, o.workers);
    const std::size_t dD = first_nonzero_weight(wdD);
    const NmdsReport primal = classify(C, D, md.d ? *md.d : 0, dD);
    const NmdsReport dual_view = classify(D, C, dD, md.d ? *md.d : 0);
    const auto checks = amds_structure_checks(D, dD, md.d ? *md.d : 0, o.budget);
    c.details["d"] = md.d ? json(*md.d) : json();
    c.details["witness"] = md.witness_support;
    c.details["primal"] = nmds_report_to_json(primal);
    c.details["dual_view"] = nmds_report_to_json(dual_view);
    for (const auto& chk : checks) c.details["amds_checks"][chk.property] = chk.verdict;
    c.expect(md.d && *md.d == 3, "distance 3");
    c.expect(md.witness_support == std::vector<std::uint32_t>({0, 3, 6}),
             "witness support {0, 3, 6}");
    c.expect(primal.classification == CodeClass::Other, "code is not near MDS");
    c.expect(dual_view.classification == CodeClass::AMDSOnly, "dual is AMDS but not near MDS");
    for (const auto& chk : checks)
        c.expect(chk.verdict != "fail", "structure check: " + chk.property);
}

inline void run_c09(Criterion& c, const ReportOptions& o) {
    const LinearCode Z = build_code_from_spec("subfield:2:bch:q=2^4,n=17,delta=3,h=1");
    const MinDistance md = min_distance(Z, 0, o.budget);
    const SpherePacking sp = sphere_packing_check(17, 9, 5, 2);
    const LinearCode ZD = dual(Z);
    const WeightDistribution wdZD = weight_distribution_enum(ZD, o.budget, o.workers);
    const std::size_t dZD = first_nonzero_weight(wdZD);
    c.details["code"] = code_to_json(Z);
    c.details["d"] = md.d ? json(*md.d) : json();
    c.details["sphere_packing_k_max"] = sp.k_max;
    c.details["dual_distribution"] = weights_to_json(wdZD);
    c.expect(Z.length() == 17 && Z.dimension() == 9, "subcode is [17,9]");
    c.expect(md.d && *md.d == 5, "distance 5");
    c.expect(sp.admissible && sp.k_max == 9, "sphere packing pins k_max = 9");
    c.expect(ZD.dimension() == 8 && dZD == 6, "dual is [17,8,6]");
}

inline void run_c10(Criterion& c, const ReportOptions& o) {
    {
        const LinearCode T = build_code_from_spec("subfield:3:bch:q=3^2,n=10,delta=3,h=1");
        const WeightDistribution wd = weight_distribution_enum(T, o.budget, o.workers);
        const LinearCode TD = dual(T);
        const MinDistance mdD = min_distance(TD, 0, o.budget);
        c.details["s2"]["code"] = code_to_json(T);
        c.details["s2"]["distribution"] = weights_to_json(wd);
        c.expect(T.length() == 10 && T.dimension() == 2, "s=2 subcode is [10,2]");
        c.expect(first_nonzero_weight(wd) == 5, "s=2 distance 5");
        c.expect(mdD.d && *mdD.d == 2, "s=2 dual distance 2");
    }
    {
        const LinearCode T = build_code_from_spec("subfield:3:bch:q=3^3,n=28,delta=3,h=1");
        const MinDistance md = min_distance(T, 0, o.budget);
        const LinearCode TD = dual(T);
        const WeightDistribution wdD = weight_distribution_enum(TD, o.budget, o.workers);
        c.details["s3"]["code"] = code_to_json(T);
        c.details["s3"]["d"] = md.d ? json(*md.d) : json();
        c.details["s3"]["dual_distribution"] = weights_to_json(wdD);
        c.expect(T.length() == 28 && T.dimension() == 16, "s=3 subcode is [28,16]");
        c.expect(md.d && *md.d == 4, "s=3 distance confirmed 4");
        c.expect(TD.dimension() == 12 && first_nonzero_weight(wdD) == 8, "s=3 dual is [28,12,8]");
    }
}

// Property suites. Each sub-suite reports its own failure string.
inline void run_c11(Criterion& c, const ReportOptions& o) {
    // (a) MacWilliams round-trip on pseudorandom small codes
    {
        SplitMix rng(0x5eed0001);
        const std::vector<std::pair<std::uint64_t, std::size_t>> field_specs = {
            {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {13, 1}};
        std::size_t done = 0;
        while (done < 20) {
            const auto& [p, m] = field_specs[rng.below(field_specs.size())];
            const FieldPtr F = build_field(p, m);
            const std::uint64_t q = F->size();
            const std::size_t n = 4 + static_cast<std::size_t>(rng.below(6));
            Mat rows(F, 1 + rng.below(n - 1), n);
            for (std::size_t i = 0; i < rows.rows(); ++i)
                for (std::size_t j = 0; j < n; ++j)
                    rows.at(i, j) = static_cast<Fe>(rng.below(q));
            const LinearCode C = LinearCode::from_generator_matrix(std::move(rows));
            if (C.dimension() == 0 || C.dimension() == n) continue;
            if (enum_cost(q, C.dimension()) > (1u << 20) ||
                enum_cost(q, n - C.dimension()) > (1u << 20))
                continue;
            const LinearCode D = dual(C);
            const WeightDistribution wdC = weight_distribution_enum(C, o.budget, o.workers);
            const WeightDistribution wdD = weight_distribution_enum(D, o.budget, o.workers);
            const WeightDistribution viaC = macwilliams_transform(wdC, n, C.dimension(), q);
            const WeightDistribution viaD = macwilliams_transform(wdD, n, D.dimension(), q);
            c.expect(viaC.counts == wdD.counts && viaD.counts == wdC.counts,
                     "(a) MacWilliams round-trip on a random code");
            ++done;
        }
        c.details["a_random_codes"] = done;
    }
    // (b)+(c) closed forms and the shared minimum-weight count across the
    // family instances, plus (e) pairing bijectivity
    {
        struct Inst {
            std::string name;
            LinearCode code;
        };
        std::vector<Inst> insts;
        insts.push_back({"golay11", golay11()});
        insts.push_back({"golay12", extend(golay11())});
        insts.push_back({"golay11_lifted", lift(golay11(), build_field(3, 2))});
        insts.push_back({"family_q9", bch({build_field(3, 2), 10, 3, 1})});
        insts.push_back({"family_q16", bch({build_field(2, 4), 17, 3, 1})});
        insts.push_back({"family_q27", bch({build_field(3, 3), 28, 3, 1})});
        for (const Inst& inst : insts) {
            const LinearCode& C = inst.code;
            const std::size_t n = C.length(), k = C.dimension();
            const std::uint64_t q = C.field()->size();
            const LinearCode D = dual(C);
            WeightDistribution wdC, wdD;
            if (enum_cost(q, k) <= o.budget) {
                wdC = weight_distribution_enum(C, o.budget, o.workers);
                wdD = macwilliams_transform(wdC, n, k, q);
            } else {
                wdD = weight_distribution_enum(D, o.budget, o.workers);
                wdC = macwilliams_transform(wdD, n, n - k, q);
            }
            const std::size_t d = first_nonzero_weight(wdC);
            const std::size_t dD = first_nonzero_weight(wdD);
            const NmdsReport rep = classify(C, D, d, dD);
            c.expect(rep.classification == CodeClass::NMDS, "(b) " + inst.name + " is near MDS");
            c.expect(wdC.counts[n - k] == wdD.counts[k],
                     "(c) shared minimum-weight count on " + inst.name);
            const auto closed = nmds_weight_formulas(n, k, q, wdC.counts[n - k]);
            c.expect(closed.first.counts == wdC.counts && closed.second.counts == wdD.counts,
                     "(b) closed forms match on " + inst.name);
            const PairingTable pt = min_weight_pairing(C, D, o.budget, o.workers);
            c.expect(pt.supports.size() == pt.dual_supports.size() && !pt.supports.empty(),
                     "(e) pairing is a bijection on " + inst.name);
            c.details["pairing"][inst.name] = pt.supports.size();
        }
    }
    // (d) determinant identity oracles
    {
        for (const auto& [p, m] : std::vector<std::pair<std::uint64_t, std::size_t>>{{3, 4},
                                                                                     {2, 8}}) {
            const FieldPtr F = build_field(p, m);
            SplitMix rng(0x5eed0002 + p);
            bool all3 = true, all4 = true;
            for (int i = 0; i < 1000; ++i) {
                const Fe x = static_cast<Fe>(1 + rng.below(F->size() - 1));
                const Fe y = static_cast<Fe>(1 + rng.below(F->size() - 1));
                const Fe z = static_cast<Fe>(1 + rng.below(F->size() - 1));
                const Fe w = static_cast<Fe>(1 + rng.below(F->size() - 1));
                const auto [l3, r3] = det_identity_oracle3(*F, x, y, z);
                const auto [l4, r4] = det_identity_oracle4(*F, x, y, z, w);
                all3 = all3 && l3 == r3;
                all4 = all4 && l4 == r4;
            }
            c.expect(all3, "(d) 3x3 determinant identity over " + F->spec_string());
            c.expect(all4, "(d) 4x4 determinant identity over " + F->spec_string());
        }
    }
    // (f) factorization closure for every length/field pair in use
    {
        const std::vector<std::pair<std::uint64_t, FieldPtr>> uses = {
            {11, build_field(3, 1)}, {10, build_field(3, 2)}, {28, build_field(3, 3)},
            {17, build_field(2, 4)}, {9, build_field(2, 3)},  {17, build_field(2, 1)},
            {10, build_field(3, 1)}, {28, build_field(3, 1)}, {82, build_field(3, 4)},
            {65, build_field(2, 6)}};
        for (const auto& [n, F] : uses) {
            const std::vector<Poly> factors = factor_xn_minus_1(F, n);
            Poly prod = poly_const(F, 1);
            for (const Poly& f : factors) prod = poly_mul(prod, f);
            c.expect(poly_equal(prod, poly_xn_minus_1(F, n)),
                     "(f) factor product for n=" + std::to_string(n) + " over " +
                         F->spec_string());
        }
    }
    // (g) worker-count independence
    {
        const LinearCode C = bch({build_field(3, 2), 10, 3, 1});
        const LinearCode D = dual(C);
        const WeightDistribution w1 = weight_distribution_enum(D, o.budget, 1);
        const WeightDistribution w4 = weight_distribution_enum(D, o.budget, 4);
        c.expect(w1.counts == w4.counts, "(g) distribution independent of workers");
        const Design d1 = support_design(C, 4, o.budget, 1);
        const Design d4 = support_design(C, 4, o.budget, 4);
        c.expect(same_design(d1, d4), "(g) support design independent of workers");
        const DesignCheck k1 = verify_t_design(d1, 3, o.budget, 1);
        const DesignCheck k4 = verify_t_design(d1, 3, o.budget, 4);
        c.expect(k1.is_t_design == k4.is_t_design && k1.lambda == k4.lambda,
                 "(g) verification independent of workers");
    }
}

inline void run_c12(Criterion& c, const ReportOptions& o) {
    {
        const FieldPtr F = build_field(3, 4);
        const LinearCode C = bch({F, 82, 3, 1});
        const LinearCode D = dual(C);
        const Design from_code = support_design(C, 4, o.budget, o.workers);
        const Design direct = sqs_direct(F);
        const DesignCheck chk = verify_t_design(from_code, 3, o.budget, o.workers);
        const WeightDistribution wdD = weight_distribution_enum(D, std::max<std::uint64_t>(o.budget, 1ull << 27), o.workers);
        const auto closed = nmds_weight_formulas(82, 78, 81, wdD.counts[78]);
        c.details["q81"]["blocks"] = from_code.blocks.size();
        c.details["q81"]["check"] = design_check_to_json(chk);
        c.details["q81"]["dual_distribution"] = weights_to_json(wdD);
        c.expect(same_design(from_code, direct), "q81 support design equals direct block set");
        c.expect(from_code.blocks.size() == 22140, "q81 22140 blocks");
        c.expect(chk.is_t_design && chk.lambda == 1, "q81 Steiner 3-(82,4,1)");
        c.expect(closed.second.counts == wdD.counts, "q81 closed form matches enumeration");
    }
    {
        const FieldPtr F = build_field(2, 6);
        const LinearCode C = bch({F, 65, 3, 1});
        const Design from_code = support_design(C, 4, o.budget, o.workers);
        const Design direct = sqs_direct(F);
        const DesignCheck chk = verify_t_design(from_code, 2, o.budget, o.workers);
        c.details["q64"]["blocks"] = from_code.blocks.size();
        c.details["q64"]["check"] = design_check_to_json(chk);
        c.expect(same_design(from_code, direct), "q64 support design equals direct block set");
        c.expect(from_code.blocks.size() == 10400, "q64 10400 blocks");
        c.expect(chk.is_t_design && chk.lambda == 30, "q64 2-(65,4,30)");
    }
}

}  // namespace report_detail

inline std::vector<Criterion> run_paper_report(const ReportOptions& o) {
    using Runner = void (*)(Criterion&, const ReportOptions&);
    struct Item {
        const char* id;
        const char* name;
        double limit;
        Runner run;
        bool long_only;
    };
    const std::vector<Item> items = {
        {"c01", "ternary Golay enumerator", 1, report_detail::run_c01, false},
        {"c02", "Golay lifted to GF(9)", 5, report_detail::run_c02, false},
        {"c03", "extended length-10 code over GF(9)", 5, report_detail::run_c03, false},
        {"c04", "q=9 and q=27 family parameters and dual distributions", 30,
         report_detail::run_c04, false},
        {"c05", "Steiner quadruple systems at q=9 and q=27", 30, report_detail::run_c05, false},
        {"c06", "weight-5 designs at q=9 and q=27", 300, report_detail::run_c06, false},
        {"c07", "q=16 family: counts, designs, Assmus-Mattson", 30, report_detail::run_c07,
         false},
        {"c08", "q=8 code: distance witness and AMDS structure", 1, report_detail::run_c08,
         false},
        {"c09", "binary subcode of the q=16 code", 1, report_detail::run_c09, false},
        {"c10", "ternary subcodes at s=2 and s=3", 120, report_detail::run_c10, false},
        {"c11", "property suites", 120, report_detail::run_c11, false},
        {"c12", "q=81 and q=64 large instances", 1800, report_detail::run_c12, true},
    };
    std::vector<Criterion> out;
    for (const Item& item : items) {
        if (item.long_only && !o.long_tests) continue;
        Criterion c;
        c.id = item.id;
        c.name = item.name;
        c.limit_seconds = item.limit;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            item.run(c, o);
        } catch (const std::exception& e) {
            c.pass = false;
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.seconds > c.limit_seconds) {
            c.pass = false;
            c.failures.push_back("runtime limit exceeded");
        }
        out.push_back(std::move(c));
    }
    return out;
}

inline json report_to_json(const std::vector<Criterion>& items) {
    json j;
    j["schema"] = 1;
    bool all = true;
    json arr = json::array();
    for (const Criterion& c : items) {
        json e;
        e["id"] = c.id;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["failures"] = c.failures;
        e["details"] = c.details;
        arr.push_back(e);
        all = all && c.pass;
    }
    j["criteria"] = arr;
    j["all_pass"] = all;
    return j;
}

}  // namespace nmds
