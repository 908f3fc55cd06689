#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "nmds/analysis.hpp"
#include "nmds/code.hpp"
#include "nmds/design.hpp"
#include "nmds/field.hpp"

namespace nmds {

// Plain nlohmann::json keeps object keys sorted, which is what makes two
// runs of the same command byte-identical.
using json = nlohmann::json;

// Counts that fit an unsigned 64-bit integer serialize as JSON numbers;
// anything larger becomes a decimal string so no precision is ever lost.
inline json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(~std::uint64_t(0) >> 1)) return json(v.convert_to<std::uint64_t>());
    return json(v.str());
}

inline json field_to_json(const Field& f) {
    json j;
    j["spec"] = f.spec_string();
    j["characteristic"] = f.characteristic();
    j["size"] = f.size();
    j["modulus"] = f.modulus();
    j["modulus_over"] = f.is_prime_field() ? "prime" : f.base()->spec_string();
    j["alpha"] = f.alpha();
    return j;
}

inline json weights_to_json(const WeightDistribution& wd) {
    json arr = json::array();
    for (const BigInt& c : wd.counts) arr.push_back(big_to_json(c));
    return arr;
}

inline json code_to_json(const LinearCode& c) {
    json j;
    j["label"] = c.label();
    j["n"] = c.length();
    j["k"] = c.dimension();
    j["field"] = field_to_json(*c.field());
    if (c.gen_poly()) j["generator_poly"] = c.gen_poly()->c;
    return j;
}

inline json nmds_report_to_json(const NmdsReport& r) {
    json j;
    j["label"] = r.label;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["d_dual"] = r.d_dual;
    j["defect"] = r.defect;
    j["defect_dual"] = r.defect_dual;
    j["classification"] = to_string(r.classification);
    j["extremality"] = to_string(r.extremality);
    return j;
}

inline json design_to_json(const Design& d) {
    json j;
    j["v"] = d.v;
    j["k"] = d.k;
    j["b"] = d.blocks.size();
    j["blocks"] = d.blocks;
    return j;
}

inline json design_check_to_json(const DesignCheck& c) {
    json j;
    j["t"] = c.t;
    j["is_t_design"] = c.is_t_design;
    if (c.is_t_design) j["lambda"] = c.lambda;
    if (c.counterexample) {
        j["counterexample"] = {{"low", c.counterexample->first}, {"high", c.counterexample->second}};
    }
    return j;
}

inline json assmus_mattson_to_json(const AssmusMattson& am) {
    json j;
    j["applies"] = am.applies;
    j["s_count"] = am.s_count;
    j["w_cap"] = am.w_cap;
    j["w_cap_dual"] = am.w_cap_dual;
    j["design_weights"] = am.design_weights;
    j["design_weights_dual"] = am.design_weights_dual;
    return j;
}

inline json min_distance_to_json(const MinDistance& m) {
    json j;
    if (m.d) {
        j["d"] = *m.d;
        j["witness_support"] = m.witness_support;
    } else {
        j["d_greater_than"] = m.searched_up_to;
    }
    return j;
}

}  // namespace nmds
