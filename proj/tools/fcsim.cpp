// fcsim: run scenarios, recompute metrics from logs, run experiments,
// sweep a knob, or re-render a saved report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fcsim/event_log.hpp"
#include "fcsim/experiments.hpp"
#include "fcsim/metrics.hpp"
#include "fcsim/report.hpp"
#include "fcsim/scenario.hpp"
#include "fcsim/simulation.hpp"

namespace {

using nlohmann::json;

fcsim::ScenarioConfig load_with_seed(const std::string& path, std::optional<uint64_t> seed) {
    auto cfg = fcsim::load_scenario_file(path);
    if (seed) {
        cfg.seed = *seed;
        if (cfg.experiment && cfg.experiment->replicate_seeds.size() == 1)
            cfg.experiment->replicate_seeds = {*seed};
    }
    return cfg;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_dir,
                 std::optional<uint64_t> seed) {
    auto cfg = load_with_seed(scenario_path, seed);
    auto result = fcsim::run_simulation(cfg);
    std::filesystem::create_directories(out_dir);
    fcsim::write_event_log(result.events, out_dir + "/events.tsv");
    fcsim::write_contents_table(result.contents, cfg.genres, out_dir + "/contents.tsv");
    write_text(out_dir + "/scenario.json", fcsim::serialize_scenario(cfg));
    fcsim::emit_report(fcsim::report_from_result(result), out_dir);
    std::cout << "simulate: " << result.events.size() << " events, "
              << result.contents.size() << " contents -> " << out_dir << '\n';
    return 0;
}

// "x:y" where y may be the literal "views_min".
std::pair<int64_t, std::optional<int64_t>> parse_cvp_spec(const std::string& s) {
    const auto pos = s.find(':');
    if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size())
        throw std::runtime_error("--cvp expects x:y, got '" + s + "'");
    const int64_t x = std::stoll(s.substr(0, pos));
    const std::string y = s.substr(pos + 1);
    if (y == "views_min") return {x, std::nullopt};
    return {x, std::stoll(y)};
}

int cmd_metrics(const std::string& log_path, const std::string& contents_path,
                const std::string& scenario_path, std::vector<std::string> cvp_specs,
                uint64_t views_min_flag, const std::string& out_dir) {
    fcsim::MetricsConfig mcfg;
    uint64_t views_min = views_min_flag;
    if (!scenario_path.empty()) {
        auto cfg = fcsim::load_scenario_file(scenario_path);
        mcfg = cfg.metrics;
        if (views_min_flag == 0) views_min = cfg.serving.views_min;
    }
    if (views_min == 0) views_min = 200;

    auto events = fcsim::read_event_log(log_path);
    fcsim::StreamingStats stats;
    for (const auto& m : fcsim::read_contents_table(contents_path))
        stats.register_content(m.id, m.genre, m.created_at, views_min);
    for (const auto& ev : events) stats.add(ev);

    const fcsim::ViewLedger ledger = stats.ledger();
    auto report = fcsim::compute_report(ledger, events, mcfg, views_min, "all",
                                        fcsim::delivered_fetches(events));
    for (const auto& spec : cvp_specs) {
        const auto [x, y_opt] = parse_cvp_spec(spec);
        const int64_t y = y_opt.value_or(static_cast<int64_t>(views_min));
        std::cout << "cvp(" << x << '|' << y << ")="
                  << fcsim::render_optional(fcsim::cvp(ledger, x, y)) << '\n';
    }
    if (!out_dir.empty())
        fcsim::emit_report(report, out_dir);
    else
        std::cout << fcsim::report_to_json(report).dump(2) << '\n';
    return 0;
}

int cmd_experiment(const std::string& scenario_path, const std::string& out_dir,
                   std::optional<uint64_t> seed) {
    auto cfg = load_with_seed(scenario_path, seed);
    if (!cfg.experiment)
        throw std::runtime_error("scenario has no experiment block");
    const auto& plan = *cfg.experiment;
    std::filesystem::create_directories(out_dir);
    if (plan.arms.size() == 2 && plan.design != fcsim::Design::FullRollout) {
        std::vector<fcsim::ArmReport> arms;
        auto bias = fcsim::run_bias_analysis(plan, cfg, &arms);
        fcsim::emit_arm_reports(arms, out_dir);
        fcsim::emit_bias_table(bias, out_dir);
    } else {
        auto arms = fcsim::run_experiment(plan, cfg);
        fcsim::emit_arm_reports(arms, out_dir);
    }
    std::cout << "experiment: " << fcsim::to_string(plan.design) << ", "
              << plan.arms.size() << " arms -> " << out_dir << '\n';
    return 0;
}

json nest_override(const std::string& dotted, const json& value) {
    json out = value;
    std::vector<std::string> parts;
    size_t start = 0;
    for (;;) {
        const size_t pos = dotted.find('.', start);
        parts.push_back(dotted.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) out = json{{*it, out}};
    return out;
}

int cmd_sweep(const std::string& scenario_path, const std::string& knob,
              const std::string& values_csv, const std::string& out_dir,
              std::optional<uint64_t> seed) {
    auto base = load_with_seed(scenario_path, seed);
    std::vector<std::string> values;
    size_t start = 0;
    for (;;) {
        const size_t pos = values_csv.find(',', start);
        values.push_back(values_csv.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (values.empty()) throw std::runtime_error("--values is empty");

    std::filesystem::create_directories(out_dir);
    std::ofstream table(out_dir + "/sweep.csv", std::ios::binary);
    table << fcsim::kSweepHeader << '\n';
    for (const auto& raw : values) {
        json v;
        try {
            v = json::parse(raw);
        } catch (const json::exception&) {
            v = raw;  // bare strings (e.g. init strategies)
        }
        auto cfg = fcsim::apply_overrides(base, nest_override(knob, v));
        auto result = fcsim::run_simulation(cfg);
        auto report = fcsim::report_from_result(result);
        fcsim::emit_report(report, out_dir + "/" + raw);
        for (const auto& [name, val] : fcsim::named_metrics(report))
            table << raw << ',' << name << ',' << fcsim::render_optional(val) << '\n';
    }
    std::cout << "sweep: " << knob << " over " << values.size() << " values -> "
              << out_dir << '\n';
    return 0;
}

int cmd_report(const std::string& report_path, const std::string& out_dir) {
    std::ifstream in(report_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open report: " + report_path);
    json j = json::parse(in);
    fcsim::emit_report(fcsim::report_from_json(j), out_dir);
    std::cout << "report: re-rendered -> " << out_dir << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fresh-content pipeline simulator"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir, log_path, contents_path, knob, values_csv, report_path;
    std::optional<uint64_t> seed;
    std::vector<std::string> cvp_specs;
    uint64_t views_min_flag = 0;

    auto* sim = app.add_subcommand("simulate", "run a scenario: event log + report");
    sim->add_option("--scenario", scenario_path, "scenario file")->required();
    sim->add_option("--out", out_dir, "output directory")->required();
    sim->add_option("--seed", seed, "override the scenario seed");

    auto* met = app.add_subcommand("metrics", "recompute metrics from an event log");
    met->add_option("--log", log_path, "event log (tsv)")->required();
    met->add_option("--contents", contents_path, "contents sidecar table")->required();
    met->add_option("--scenario", scenario_path, "scenario file for metric settings");
    met->add_option("--views-min", views_min_flag, "early-stage view threshold");
    met->add_option("--cvp", cvp_specs, "extra CVP points, x:y (y may be 'views_min')");
    met->add_option("--out", out_dir, "output directory (default: print JSON)");

    auto* exp = app.add_subcommand("experiment", "run an experiment plan: arm reports + bias");
    exp->add_option("--scenario", scenario_path, "scenario file with experiment block")->required();
    exp->add_option("--out", out_dir, "output directory")->required();
    exp->add_option("--seed", seed, "override the scenario seed");

    auto* swp = app.add_subcommand("sweep", "grid over one scenario knob");
    swp->add_option("--scenario", scenario_path, "scenario file")->required();
    swp->add_option("--knob", knob, "dotted config path, e.g. serving.views_min")->required();
    swp->add_option("--values", values_csv, "comma-separated values")->required();
    swp->add_option("--out", out_dir, "output directory")->required();
    swp->add_option("--seed", seed, "override the scenario seed");

    auto* rep = app.add_subcommand("report", "re-render a saved report.json");
    rep->add_option("--report", report_path, "report.json path")->required();
    rep->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(scenario_path, out_dir, seed);
        if (met->parsed())
            return cmd_metrics(log_path, contents_path, scenario_path, cvp_specs,
                               views_min_flag, out_dir);
        if (exp->parsed()) return cmd_experiment(scenario_path, out_dir, seed);
        if (swp->parsed()) return cmd_sweep(scenario_path, knob, values_csv, out_dir, seed);
        if (rep->parsed()) return cmd_report(report_path, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
