#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nmds/code.hpp"
#include "nmds/errors.hpp"
#include "nmds/field.hpp"

namespace nmds {

// Field spec: "p" or "p^m".
inline FieldPtr parse_field_spec(const std::string& s, bool use_tables = true) {
    const auto caret = s.find('^');
    std::uint64_t p = 0;
    std::uint64_t m = 1;
    try {
        std::size_t used = 0;
        p = std::stoull(caret == std::string::npos ? s : s.substr(0, caret), &used);
        if (used != (caret == std::string::npos ? s.size() : caret))
            throw spec_parse_error("trailing characters in field spec '" + s + "'");
        if (caret != std::string::npos) {
            m = std::stoull(s.substr(caret + 1), &used);
            if (used != s.size() - caret - 1)
                throw spec_parse_error("trailing characters in field spec '" + s + "'");
        }
    } catch (const spec_parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw spec_parse_error("malformed field spec '" + s + "'");
    }
    if (m == 0 || m > 32) throw spec_parse_error("field degree out of range in '" + s + "'");
    return build_field(p, static_cast<std::size_t>(m), use_tables);
}

namespace detail {

inline std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> kv;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        const std::string item = s.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw spec_parse_error("expected key=value, got '" + item + "'");
        if (!kv.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
            throw spec_parse_error("duplicate key '" + item.substr(0, eq) + "'");
        pos = comma + 1;
    }
    return kv;
}

inline std::int64_t parse_int(const std::string& key, const std::map<std::string, std::string>& kv) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw spec_parse_error("missing key '" + key + "' in bch spec");
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw spec_parse_error("malformed integer for key '" + key + "'");
    }
}

}  // namespace detail

// Code spec grammar:
//   bch:q=<p or p^s>,n=<int>,delta=<int>,h=<int>
//   dual:<spec> | extend:<spec> | subfield:<field>:<spec> | lift:<field>:<spec>
inline LinearCode build_code_from_spec(const std::string& spec, bool use_tables = true) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw spec_parse_error("expected '<op>:...' in code spec '" + spec + "'");
    const std::string op = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (op == "bch") {
        const auto kv = detail::parse_kv(rest);
        const auto qit = kv.find("q");
        if (qit == kv.end()) throw spec_parse_error("missing key 'q' in bch spec");
        BchSpec bs;
        bs.field = parse_field_spec(qit->second, use_tables);
        const std::int64_t n = detail::parse_int("n", kv);
        const std::int64_t delta = detail::parse_int("delta", kv);
        if (n < 2 || delta < 2) throw spec_parse_error("bch needs n >= 2 and delta >= 2");
        bs.n = static_cast<std::uint64_t>(n);
        bs.delta = static_cast<std::uint32_t>(delta);
        bs.h = detail::parse_int("h", kv);
        if (kv.size() != 4) throw spec_parse_error("bch spec takes exactly q, n, delta, h");
        return bch(bs, use_tables);
    }
    if (op == "dual") return dual(build_code_from_spec(rest, use_tables));
    if (op == "extend") return extend(build_code_from_spec(rest, use_tables));
    if (op == "subfield" || op == "lift") {
        const auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw spec_parse_error("expected '" + op + ":<field>:<spec>'");
        const FieldPtr f = parse_field_spec(rest.substr(0, colon2), use_tables);
        const LinearCode inner = build_code_from_spec(rest.substr(colon2 + 1), use_tables);
        return op == "subfield" ? subfield_subcode(inner, f) : lift(inner, f);
    }
    throw spec_parse_error("unknown code operation '" + op + "'");
}

}  // namespace nmds
