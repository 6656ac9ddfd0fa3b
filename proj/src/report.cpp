#include "fcsim/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fcsim {

using nlohmann::json;

namespace {

json opt_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<double> opt_from(const json& j) {
    return j.is_null() ? std::nullopt : std::optional<double>(j.get<double>());
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("report: cannot open for writing: " + path);
    return out;
}

}  // namespace

std::string render_optional(const std::optional<double>& v) {
    if (!v) return "n/a";
    std::ostringstream os;
    os.precision(12);
    os << *v;
    return os.str();
}

json report_to_json(const MetricReport& r) {
    json cvp = json::array();
    for (const auto& [x, v] : r.cvp_curve) cvp.push_back({{"threshold", x}, {"cvp", opt_json(v)}});
    json csr = json::array();
    for (const auto& p : r.csr_curve)
        csr.push_back({{"y", p.y},
                       {"x", p.x},
                       {"t_ticks", p.t},
                       {"t_prime_ticks", p.t_prime},
                       {"csr", opt_json(p.value)}});
    json latency = json::array();
    for (const auto& gl : r.genre_latency) {
        json buckets = json::array();
        for (const auto& b : gl.buckets)
            buckets.push_back({{"lo_ticks", b.lo},
                               {"hi_ticks", b.hi},
                               {"count", b.count},
                               {"cvp", opt_json(b.value)}});
        latency.push_back({{"genre", gl.genre}, {"buckets", std::move(buckets)}});
    }
    json j{{"arm", r.arm},
           {"views_min", r.views_min},
           {"cvp_curve", std::move(cvp)},
           {"csr_curve", std::move(csr)},
           {"engagement_per_view", opt_json(r.engagement_per_view)},
           {"successful_play_rate", opt_json(r.successful_play_rate)},
           {"engagement_per_fetch", opt_json(r.engagement_per_fetch)},
           {"genre_latency", std::move(latency)}};
    if (r.offline) {
        json algos = json::array();
        for (const auto& a : r.offline->algos)
            algos.push_back({{"algo", a.algo},
                             {"auc", opt_json(a.auc)},
                             {"f1", opt_json(a.f1)},
                             {"rela_impr", opt_json(a.rela_impr)}});
        j["offline"] = {{"baseline_algo", r.offline->baseline_algo}, {"algos", std::move(algos)}};
    }
    return j;
}

MetricReport report_from_json(const json& j) {
    MetricReport r;
    r.arm = j.at("arm").get<std::string>();
    r.views_min = j.at("views_min").get<uint64_t>();
    for (const auto& p : j.at("cvp_curve"))
        r.cvp_curve.emplace_back(p.at("threshold").get<int64_t>(), opt_from(p.at("cvp")));
    for (const auto& p : j.at("csr_curve"))
        r.csr_curve.push_back({p.at("y").get<int64_t>(), p.at("x").get<int64_t>(),
                               p.at("t_ticks").get<Tick>(), p.at("t_prime_ticks").get<Tick>(),
                               opt_from(p.at("csr"))});
    r.engagement_per_view = opt_from(j.at("engagement_per_view"));
    r.successful_play_rate = opt_from(j.at("successful_play_rate"));
    r.engagement_per_fetch = opt_from(j.at("engagement_per_fetch"));
    for (const auto& gl : j.at("genre_latency")) {
        MetricReport::GenreLatency g;
        g.genre = gl.at("genre").get<std::string>();
        for (const auto& b : gl.at("buckets"))
            g.buckets.push_back({b.at("lo_ticks").get<Tick>(), b.at("hi_ticks").get<Tick>(),
                                 b.at("count").get<uint64_t>(), opt_from(b.at("cvp"))});
        r.genre_latency.push_back(std::move(g));
    }
    if (j.contains("offline")) {
        OfflineReport off;
        off.baseline_algo = j.at("offline").at("baseline_algo").get<std::string>();
        for (const auto& a : j.at("offline").at("algos"))
            off.algos.push_back({a.at("algo").get<std::string>(), opt_from(a.at("auc")),
                                 opt_from(a.at("f1")), opt_from(a.at("rela_impr"))});
        r.offline = std::move(off);
    }
    return r;
}

void emit_report(const MetricReport& r, const std::string& dir) {
    {
        auto out = open_out(dir, "report.json");
        out << report_to_json(r).dump(2) << '\n';
    }
    {
        auto out = open_out(dir, "cvp_curve.csv");
        out << kCvpCurveHeader << '\n';
        for (const auto& [x, v] : r.cvp_curve) out << x << ',' << render_optional(v) << '\n';
    }
    {
        auto out = open_out(dir, "csr_curve.csv");
        out << kCsrCurveHeader << '\n';
        for (const auto& p : r.csr_curve)
            out << p.y << ',' << p.x << ',' << p.t << ',' << p.t_prime << ','
                << render_optional(p.value) << '\n';
    }
    {
        auto out = open_out(dir, "latency_buckets.csv");
        out << kLatencyCurveHeader << '\n';
        for (const auto& gl : r.genre_latency)
            for (const auto& b : gl.buckets)
                out << gl.genre << ',' << b.lo << ',' << b.hi << ',' << b.count << ','
                    << render_optional(b.value) << '\n';
    }
}

std::vector<std::pair<std::string, std::optional<double>>> named_metrics(const MetricReport& r) {
    std::vector<std::pair<std::string, std::optional<double>>> out;
    for (const auto& [x, v] : r.cvp_curve) out.emplace_back("cvp@" + std::to_string(x), v);
    for (const auto& p : r.csr_curve)
        out.emplace_back("csr@y" + std::to_string(p.y) + "_x" + std::to_string(p.x), p.value);
    out.emplace_back("engagement_per_view", r.engagement_per_view);
    out.emplace_back("successful_play_rate", r.successful_play_rate);
    out.emplace_back("engagement_per_fetch", r.engagement_per_fetch);
    return out;
}

void emit_arm_reports(const std::vector<ArmReport>& arms, const std::string& dir) {
    for (const auto& arm : arms) {
        json j{{"label", arm.label},
               {"mean", report_to_json(arm.mean)},
               {"stddev", report_to_json(arm.stddev)},
               {"exposure",
                {{"views", arm.exposure.views},
                 {"fresh_views", arm.exposure.fresh_views},
                 {"ranked_views", arm.exposure.ranked_views},
                 {"fetches", arm.exposure.fetches},
                 {"views_by_stage",
                  {{"early", arm.exposure.views_by_stage[0]},
                   {"growth", arm.exposure.views_by_stage[1]},
                   {"mature", arm.exposure.views_by_stage[2]},
                   {"expired", arm.exposure.views_by_stage[3]}}}}}};
        json reps = json::array();
        for (const auto& rep : arm.replicates) reps.push_back(report_to_json(rep));
        j["replicates"] = std::move(reps);
        auto out = open_out(dir, "report_" + arm.label + ".json");
        out << j.dump(2) << '\n';
    }
    if (arms.size() >= 2) {
        auto out = open_out(dir, "deltas.csv");
        out << kDeltaHeader << '\n';
        auto a = named_metrics(arms[0].mean);
        auto b = named_metrics(arms[1].mean);
        for (size_t i = 0; i < a.size(); ++i) {
            std::optional<double> delta;
            if (a[i].second && b[i].second) delta = *b[i].second - *a[i].second;
            out << a[i].first << ',' << render_optional(a[i].second) << ','
                << render_optional(b[i].second) << ',' << render_optional(delta) << '\n';
        }
    }
}

void emit_bias_table(const std::vector<BiasRow>& rows, const std::string& dir) {
    auto out = open_out(dir, "bias.csv");
    out << kBiasHeader << '\n';
    for (const auto& row : rows) {
        if (!row.defined) {
            out << row.metric << ",n/a,n/a,n/a\n";
            continue;
        }
        out << row.metric << ',' << row.experiment_delta << ',' << row.truth_delta << ','
            << row.bias << '\n';
    }
}

}  // namespace fcsim
