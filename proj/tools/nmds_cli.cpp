// Command-line front end: builds codes from spec strings, reports
// parameters and weight distributions, extracts and verifies designs, and
// emits the consolidated reproduction report.
//
// Exit codes: 0 success/verified, 1 verified-false, 2 usage error,
// 3 budget exceeded, 4 internal invariant failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nmds/codespec.hpp"
#include "nmds/json_io.hpp"
#include "nmds/report.hpp"

namespace {

using nmds::json;

struct RunConfig {
    std::string code_spec;
    std::uint32_t w = 0;
    std::uint32_t t = 0;
    std::uint64_t budget = nmds::kDefaultBudget;
    std::size_t workers = 1;
    std::string format = "json";
    bool long_tests = false;
};

void emit_kv_csv(std::ostream& os, const json& j, const std::string& prefix = "") {
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object())
            emit_kv_csv(os, value, name);
        else
            os << name << "," << (value.is_string() ? value.get<std::string>() : value.dump())
               << "\n";
    }
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (cfg.format == "csv")
        emit_kv_csv(std::cout, j);
    else
        std::cout << text;
}

int cmd_code(const RunConfig& cfg) {
    const nmds::LinearCode c = nmds::build_code_from_spec(cfg.code_spec);
    const nmds::MinDistance md = nmds::min_distance(c, 0, cfg.budget);
    json j = nmds::code_to_json(c);
    j["schema"] = 1;
    j["distance"] = nmds::min_distance_to_json(md);
    std::string text = "code " + c.label() + ": n=" + std::to_string(c.length()) +
                       " k=" + std::to_string(c.dimension()) + " over " +
                       c.field()->spec_string();
    if (md.d)
        text += " d=" + std::to_string(*md.d);
    else
        text += " d>" + std::to_string(md.searched_up_to);
    text += "\n";
    emit(cfg, j, text);
    return 0;
}

int cmd_weights(const RunConfig& cfg) {
    const nmds::LinearCode c = nmds::build_code_from_spec(cfg.code_spec);
    const std::size_t n = c.length(), k = c.dimension();
    const std::uint64_t q = c.field()->size();
    nmds::WeightDistribution wd;
    std::string method;
    if (nmds::enum_cost(q, k) <= cfg.budget) {
        wd = nmds::weight_distribution_enum(c, cfg.budget, cfg.workers);
        method = "enumeration";
    } else if (nmds::enum_cost(q, n - k) <= cfg.budget) {
        const nmds::WeightDistribution wd_dual =
            nmds::weight_distribution_enum(nmds::dual(c), cfg.budget, cfg.workers);
        wd = nmds::macwilliams_transform(wd_dual, n, n - k, q);
        method = "macwilliams-from-dual";
    } else {
        throw nmds::budget_exceeded("both the code and its dual exceed the enumeration budget");
    }
    json j;
    j["schema"] = 1;
    j["code"] = nmds::code_to_json(c);
    j["method"] = method;
    j["weights"] = nmds::weights_to_json(wd);
    std::string text = "weights of " + c.label() + " (" + method + ")\n";
    if (cfg.format == "csv") {
        std::cout << "weight,count\n";
        for (std::size_t i = 0; i < wd.counts.size(); ++i)
            if (wd.counts[i] != 0) std::cout << i << "," << wd.counts[i].str() << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < wd.counts.size(); ++i)
        if (wd.counts[i] != 0) text += "  A_" + std::to_string(i) + " = " + wd.counts[i].str() + "\n";
    emit(cfg, j, text);
    return 0;
}

int cmd_design(const RunConfig& cfg) {
    const nmds::LinearCode c = nmds::build_code_from_spec(cfg.code_spec);
    const nmds::Design d = nmds::support_design(c, cfg.w, cfg.budget, cfg.workers);
    const nmds::DesignCheck chk = nmds::verify_t_design(d, cfg.t, cfg.budget, cfg.workers);
    json j;
    j["schema"] = 1;
    j["design"] = nmds::design_to_json(d);
    j["check"] = nmds::design_check_to_json(chk);
    std::string text = "weight-" + std::to_string(cfg.w) + " supports of " + c.label() + ": " +
                       std::to_string(d.blocks.size()) + " blocks on " + std::to_string(d.v) +
                       " points\n";
    if (chk.is_t_design)
        text += "verified " + std::to_string(chk.t) + "-design with lambda = " +
                std::to_string(chk.lambda) + "\n";
    else
        text += "not a " + std::to_string(chk.t) + "-design\n";
    emit(cfg, j, text);
    return chk.is_t_design ? 0 : 1;
}

int cmd_paper_report(const RunConfig& cfg) {
    nmds::ReportOptions o;
    o.budget = cfg.budget;
    o.workers = cfg.workers;
    o.long_tests = cfg.long_tests;
    const std::vector<nmds::Criterion> items = nmds::run_paper_report(o);
    const json j = nmds::report_to_json(items);
    std::string text;
    bool all = true;
    for (const nmds::Criterion& c : items) {
        text += std::string(c.pass ? "PASS" : "FAIL") + " " + c.id + " " + c.name + "\n";
        for (const std::string& f : c.failures) text += "  ! " + f + "\n";
        all = all && c.pass;
    }
    text += all ? "all criteria pass\n" : "some criteria FAILED\n";
    if (cfg.format == "csv") {
        std::cout << "id,name,pass\n";
        for (const nmds::Criterion& c : items)
            std::cout << c.id << "," << c.name << "," << (c.pass ? "true" : "false") << "\n";
    } else {
        emit(cfg, j, text);
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-MDS code workbench"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("NMDS_BUDGET")) {
        try {
            std::size_t used = 0;
            cfg.budget = std::stoull(env, &used);
            if (used != std::string(env).size() || cfg.budget == 0)
                throw std::invalid_argument(env);
        } catch (const std::exception&) {
            std::cerr << "invalid NMDS_BUDGET value: " << env << "\n";
            return 2;
        }
    }

    const auto add_common = [&cfg](CLI::App* sub, bool needs_code) {
        if (needs_code)
            sub->add_option("--code", cfg.code_spec, "code spec string")->required();
        sub->add_option("--budget", cfg.budget, "enumeration budget")
            ->check(CLI::PositiveNumber);
        sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    CLI::App* code = app.add_subcommand("code", "report code parameters");
    add_common(code, true);
    CLI::App* weights = app.add_subcommand("weights", "exact weight distribution");
    add_common(weights, true);
    CLI::App* design = app.add_subcommand("design", "extract and verify a support design");
    add_common(design, true);
    design->add_option("--weight", cfg.w, "codeword weight")->required();
    design->add_option("--t", cfg.t, "design strength to verify")->required();
    CLI::App* report = app.add_subcommand("paper-report", "run the full reproduction report");
    add_common(report, false);
    report->add_flag("--long-tests", cfg.long_tests, "include the large instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(code)) return cmd_code(cfg);
        if (app.got_subcommand(weights)) return cmd_weights(cfg);
        if (app.got_subcommand(design)) return cmd_design(cfg);
        return cmd_paper_report(cfg);
    } catch (const nmds::spec_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nmds::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
