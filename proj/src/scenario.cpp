#include "fcsim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

namespace fcsim {

using nlohmann::json;

const char* to_string(InitStrategy s) {
    switch (s) {
        case InitStrategy::Random: return "random";
        case InitStrategy::GenreAverage: return "genre_average";
        case InitStrategy::ModelBased: return "model_based";
    }
    return "?";
}

InitStrategy init_strategy_from_string(const std::string& s) {
    if (s == "random") return InitStrategy::Random;
    if (s == "genre_average") return InitStrategy::GenreAverage;
    if (s == "model_based") return InitStrategy::ModelBased;
    throw ScenarioError("init_strategy: unknown value '" + s + "'");
}

const char* to_string(Design d) {
    switch (d) {
        case Design::UserLevel: return "user_level";
        case Design::UserContent: return "user_content";
        case Design::ParallelLifecycle: return "parallel_lifecycle";
        case Design::FullRollout: return "full_rollout";
    }
    return "?";
}

Design design_from_string(const std::string& s) {
    if (s == "user_level") return Design::UserLevel;
    if (s == "user_content") return Design::UserContent;
    if (s == "parallel_lifecycle") return Design::ParallelLifecycle;
    if (s == "full_rollout") return Design::FullRollout;
    throw ScenarioError("experiment.design: unknown value '" + s + "'");
}

namespace {

// Strict object reader: every key must be consumed, leftovers are errors.
class ObjReader {
public:
    ObjReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ScenarioError(path_ + ": expected an object");
    }

    bool has(const char* key) const { return j_.contains(key); }

    template <typename T>
    void get(const char* key, T& out) {
        if (!j_.contains(key)) return;
        used_.insert(key);
        const json& v = j_.at(key);
        // nlohmann silently wraps negatives into unsigned targets
        if constexpr (std::is_unsigned_v<T>) {
            if (v.is_number_integer() && v.get<int64_t>() < 0)
                throw ScenarioError(key_path(key) + ": must be non-negative");
        }
        try {
            out = v.get<T>();
        } catch (const json::exception&) {
            throw ScenarioError(key_path(key) + ": wrong type");
        }
    }

    template <typename T>
    T require(const char* key) {
        if (!j_.contains(key)) throw ScenarioError(key_path(key) + ": missing required key");
        used_.insert(key);
        try {
            return j_.at(key).get<T>();
        } catch (const json::exception&) {
            throw ScenarioError(key_path(key) + ": wrong type");
        }
    }

    const json* sub(const char* key) {
        if (!j_.contains(key)) return nullptr;
        used_.insert(key);
        return &j_.at(key);
    }

    std::string key_path(const char* key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!used_.contains(it.key()))
                throw ScenarioError(key_path(it.key().c_str()) + ": unknown key");
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

void check_range(bool ok, const std::string& key, const char* what) {
    if (!ok) throw ScenarioError(key + ": " + what);
}

std::array<double, kNumSurfaces> surface_map_d(const json& j, const std::string& path,
                                               std::array<double, kNumSurfaces> out) {
    ObjReader r(j, path);
    r.get("home", out[0]);
    r.get("grid", out[1]);
    r.get("scroll", out[2]);
    r.finish();
    return out;
}

std::array<int, kNumSurfaces> surface_map_i(const json& j, const std::string& path,
                                            std::array<int, kNumSurfaces> out) {
    ObjReader r(j, path);
    r.get("home", out[0]);
    r.get("grid", out[1]);
    r.get("scroll", out[2]);
    r.finish();
    return out;
}

std::vector<GenreSpec> parse_genres(const json& j) {
    if (!j.is_array() || j.empty()) throw ScenarioError("genres: expected a non-empty array");
    std::vector<GenreSpec> genres;
    double prior_sum = 0.0;
    for (size_t i = 0; i < j.size(); ++i) {
        ObjReader r(j[i], "genres[" + std::to_string(i) + "]");
        GenreSpec g;
        g.name = r.require<std::string>("name");
        g.prior = r.require<double>("prior");
        if (r.has("half_life_h")) {
            const json* hl = r.sub("half_life_h");
            if (hl->is_string()) {
                if (hl->get<std::string>() != "infinite")
                    throw ScenarioError("genres.half_life_h: expected a number or \"infinite\"");
            } else {
                double h = hl->get<double>();
                check_range(h > 0.0, "genres.half_life_h", "must be positive when finite");
                g.half_life_ticks = h * static_cast<double>(kTicksPerHour);
            }
        }
        r.get("base_appeal", g.base_appeal);
        check_range(g.base_appeal >= 0.0 && g.base_appeal <= 1.0, "genres.base_appeal",
                    "must be in [0, 1]");
        check_range(g.prior >= 0.0, "genres.prior", "must be non-negative");
        prior_sum += g.prior;
        r.finish();
        genres.push_back(std::move(g));
    }
    check_range(std::abs(prior_sum - 1.0) <= 1e-9, "genres.prior", "priors must sum to 1");
    return genres;
}

ExperimentPlan parse_experiment(const json& j, uint64_t seed) {
    ObjReader r(j, "experiment");
    ExperimentPlan plan;
    plan.design = design_from_string(r.require<std::string>("design"));
    plan.salt = r.require<std::string>("salt");
    if (plan.salt.empty()) throw ScenarioError("experiment.salt: must be non-empty");
    {
        std::string scope = "all_stages";
        r.get("confinement_scope", scope);
        if (scope == "all_stages") plan.scope = ConfinementScope::AllStages;
        else if (scope == "early_only") plan.scope = ConfinementScope::EarlyOnly;
        else throw ScenarioError("experiment.confinement_scope: unknown value '" + scope + "'");
    }
    r.get("replicate_seeds", plan.replicate_seeds);
    if (plan.replicate_seeds.empty()) plan.replicate_seeds = {seed};

    const json* arms = r.sub("arms");
    if (!arms || !arms->is_array()) throw ScenarioError("experiment.arms: expected an array");
    double weight_sum = 0.0;
    for (size_t i = 0; i < arms->size(); ++i) {
        ObjReader ar((*arms)[i], "experiment.arms[" + std::to_string(i) + "]");
        ArmSpec arm;
        arm.label = ar.require<std::string>("label");
        arm.weight = ar.require<double>("weight");
        check_range(arm.weight > 0.0, "experiment.arms.weight", "must be positive");
        if (const json* ov = ar.sub("overrides")) arm.overrides = *ov;
        ar.finish();
        weight_sum += arm.weight;
        plan.arms.push_back(std::move(arm));
    }
    check_range(std::abs(weight_sum - 1.0) <= 1e-9, "experiment.arms.weight",
                "weights must sum to 1");
    if (plan.design == Design::FullRollout)
        check_range(plan.arms.size() == 1, "experiment.arms", "full_rollout takes exactly 1 arm");
    else
        check_range(plan.arms.size() >= 2, "experiment.arms", "need at least 2 arms");
    r.finish();
    return plan;
}

void validate(const ScenarioConfig& c) {
    check_range(c.users > 0, "population.users", "must be positive");
    check_range(c.contents_per_day > 0.0, "population.contents_per_day", "must be positive");
    check_range(c.days > 0, "population.days", "must be positive");

    check_range(c.embedding.dim >= 2, "embedding.dim", "must be >= 2");
    check_range(c.embedding.sigma >= 0.0, "embedding.sigma", "must be non-negative");
    check_range(c.embedding.eta0 > 0.0 && c.embedding.eta0 <= 1.0, "embedding.eta0",
                "must be in (0, 1]");
    check_range(c.embedding.k0 > 0.0, "embedding.k0", "must be positive");
    check_range(c.embedding.noise_scale >= 0.0, "embedding.noise_scale", "must be non-negative");
    check_range(c.embedding.model_fidelity >= 0.0 && c.embedding.model_fidelity <= 1.0,
                "embedding.model_fidelity", "must be in [0, 1]");
    check_range(c.embedding.update_every_plays > 0, "embedding.update_every_plays",
                "must be positive");

    check_range(c.behavior.watch_base > 0.0 && c.behavior.watch_base < 1.0,
                "behavior.watch_base", "must be in (0, 1)");
    check_range(c.behavior.watch_concentration > 0.0, "behavior.watch_concentration",
                "must be positive");
    check_range(c.behavior.affinity_gain > 0.0, "behavior.affinity_gain", "must be positive");

    check_range(c.serving.views_min > 0, "serving.views_min", "must be positive");
    check_range(c.serving.latency_target_h > 0.0, "serving.latency_target_h",
                "must be positive");
    check_range(c.serving.epsilon >= 0.0 && c.serving.epsilon <= 1.0, "serving.epsilon",
                "must be in [0, 1]");
    check_range(c.serving.throttle_fraction >= 0.0 && c.serving.throttle_fraction <= 1.0,
                "serving.throttle_fraction", "must be in [0, 1]");
    check_range(c.serving.throttle_factor >= 0.0 && c.serving.throttle_factor <= 1.0,
                "serving.throttle_factor", "must be in [0, 1]");
    double mix = 0.0;
    for (int s = 0; s < kNumSurfaces; ++s) {
        check_range(c.serving.fresh_slots[s] >= 0, "serving.fresh_slots", "must be non-negative");
        check_range(c.serving.page_size[s] > 0, "serving.page_size", "must be positive");
        check_range(c.serving.fresh_slots[s] <= c.serving.page_size[s], "serving.fresh_slots",
                    "must not exceed serving.page_size");
        check_range(c.serving.surface_mix[s] >= 0.0, "serving.surface_mix",
                    "must be non-negative");
        mix += c.serving.surface_mix[s];
    }
    check_range(std::abs(mix - 1.0) <= 1e-9, "serving.surface_mix", "must sum to 1");

    check_range(c.lifecycle.maturity_tau >= 0.0 && c.lifecycle.maturity_tau <= 2.0,
                "lifecycle.maturity_tau", "must be in [0, 2]");
    check_range(c.lifecycle.ttl_ticks > 0, "lifecycle.ttl_days", "must be positive");
    check_range(c.lifecycle.activity_window_ticks > 0, "lifecycle.activity_window_h",
                "must be positive");
    check_range(c.lifecycle.activity_floor_views >= 0.0, "lifecycle.activity_floor_views",
                "must be non-negative");

    check_range(c.generator.feature_dim > 0, "generator.feature_dim", "must be positive");
    check_range(c.generator.activity_rate_mean >= 0.0, "generator.activity_rate_mean",
                "must be non-negative");
    check_range(c.generator.duration_min_s > 0.0 &&
                    c.generator.duration_max_s >= c.generator.duration_min_s,
                "generator.duration_min_s", "need 0 < duration_min_s <= duration_max_s");

    check_range(!c.metrics.cvp_thresholds.empty(), "metrics.cvp_thresholds",
                "must be non-empty");
    check_range(c.metrics.latency_bucket_edges.size() >= 2, "metrics.latency_bucket_edges_h",
                "need at least two edges");
    for (size_t i = 0; i + 1 < c.metrics.latency_bucket_edges.size(); ++i)
        check_range(c.metrics.latency_bucket_edges[i] < c.metrics.latency_bucket_edges[i + 1],
                    "metrics.latency_bucket_edges_h", "edges must be strictly increasing");
}

}  // namespace

ScenarioConfig scenario_from_json(const json& j) {
    ObjReader r(j, "");
    ScenarioConfig c;
    c.seed = r.require<uint64_t>("seed");

    if (const json* pop = r.sub("population")) {
        ObjReader pr(*pop, "population");
        pr.get("users", c.users);
        pr.get("contents_per_day", c.contents_per_day);
        pr.get("days", c.days);
        pr.finish();
    }

    if (const json* g = r.sub("genres")) {
        c.genres = parse_genres(*g);
    } else {
        c.genres = default_scenario().genres;
    }

    if (r.has("init_strategy"))
        c.init_strategy = init_strategy_from_string(r.require<std::string>("init_strategy"));

    if (const json* e = r.sub("embedding")) {
        ObjReader er(*e, "embedding");
        er.get("dim", c.embedding.dim);
        er.get("sigma", c.embedding.sigma);
        er.get("eta0", c.embedding.eta0);
        er.get("k0", c.embedding.k0);
        er.get("noise_scale", c.embedding.noise_scale);
        er.get("high_view_threshold", c.embedding.high_view_threshold);
        er.get("model_fidelity", c.embedding.model_fidelity);
        er.get("update_every_plays", c.embedding.update_every_plays);
        er.finish();
    }

    if (const json* b = r.sub("behavior")) {
        ObjReader br(*b, "behavior");
        br.get("b_home", c.behavior.b_home);
        br.get("b_grid", c.behavior.b_grid);
        br.get("affinity_gain", c.behavior.affinity_gain);
        br.get("watch_base", c.behavior.watch_base);
        br.get("watch_gain", c.behavior.watch_gain);
        br.get("watch_concentration", c.behavior.watch_concentration);
        br.get("engage_bias", c.behavior.engage_bias);
        br.get("engage_gain", c.behavior.engage_gain);
        br.finish();
    }

    if (const json* s = r.sub("serving")) {
        ObjReader sr(*s, "serving");
        sr.get("views_min", c.serving.views_min);
        sr.get("latency_target_h", c.serving.latency_target_h);
        sr.get("overdue_boost", c.serving.overdue_boost);
        if (const json* fs = sr.sub("fresh_slots"))
            c.serving.fresh_slots = surface_map_i(*fs, "serving.fresh_slots", c.serving.fresh_slots);
        if (const json* ps = sr.sub("page_size"))
            c.serving.page_size = surface_map_i(*ps, "serving.page_size", c.serving.page_size);
        sr.get("epsilon", c.serving.epsilon);
        if (const json* sm = sr.sub("surface_mix"))
            c.serving.surface_mix = surface_map_d(*sm, "serving.surface_mix", c.serving.surface_mix);
        sr.get("home_scan_depth_mean", c.serving.home_scan_depth_mean);
        sr.get("scroll_stop_prob", c.serving.scroll_stop_prob);
        sr.get("candidate_sample", c.serving.candidate_sample);
        sr.get("throttle_fraction", c.serving.throttle_fraction);
        sr.get("throttle_factor", c.serving.throttle_factor);
        sr.finish();
    }

    if (const json* l = r.sub("lifecycle")) {
        ObjReader lr(*l, "lifecycle");
        lr.get("maturity_tau", c.lifecycle.maturity_tau);
        {
            std::string mode = c.tau_population_mean ? "population_mean" : "fixed";
            lr.get("tau_mode", mode);
            if (mode == "fixed") c.tau_population_mean = false;
            else if (mode == "population_mean") c.tau_population_mean = true;
            else throw ScenarioError("lifecycle.tau_mode: unknown value '" + mode + "'");
        }
        if (lr.has("ttl_days")) {
            double d = lr.require<double>("ttl_days");
            c.lifecycle.ttl_ticks = static_cast<Tick>(std::llround(d * kTicksPerDay));
        }
        lr.get("activity_floor_views", c.lifecycle.activity_floor_views);
        if (lr.has("activity_window_h")) {
            double h = lr.require<double>("activity_window_h");
            c.lifecycle.activity_window_ticks = hours_to_ticks(h);
        }
        lr.finish();
    }
    c.lifecycle.views_min = c.serving.views_min;

    if (const json* g = r.sub("generator")) {
        ObjReader gr(*g, "generator");
        gr.get("user_noise", c.generator.user_noise);
        gr.get("content_noise", c.generator.content_noise);
        gr.get("feature_dim", c.generator.feature_dim);
        gr.get("feature_noise", c.generator.feature_noise);
        gr.get("activity_rate_mean", c.generator.activity_rate_mean);
        gr.get("duration_min_s", c.generator.duration_min_s);
        gr.get("duration_max_s", c.generator.duration_max_s);
        gr.finish();
    }

    if (const json* m = r.sub("metrics")) {
        ObjReader mr(*m, "metrics");
        mr.get("cvp_thresholds", c.metrics.cvp_thresholds);
        if (const json* cs = mr.sub("csr")) {
            if (!cs->is_array()) throw ScenarioError("metrics.csr: expected an array");
            c.metrics.csr_specs.clear();
            for (size_t i = 0; i < cs->size(); ++i) {
                ObjReader cr((*cs)[i], "metrics.csr[" + std::to_string(i) + "]");
                MetricsConfig::CsrSpec spec;
                cr.get("y", spec.y);
                cr.get("x", spec.x);
                if (cr.has("t_h")) spec.t = hours_to_ticks(cr.require<double>("t_h"));
                if (cr.has("t_prime_h")) spec.t_prime = hours_to_ticks(cr.require<double>("t_prime_h"));
                cr.finish();
                c.metrics.csr_specs.push_back(spec);
            }
        }
        if (const json* le = mr.sub("latency_bucket_edges_h")) {
            c.metrics.latency_bucket_edges.clear();
            for (const auto& v : *le)
                c.metrics.latency_bucket_edges.push_back(hours_to_ticks(v.get<double>()));
        }
        mr.get("latency_cvp_x", c.metrics.latency_cvp_x);
        mr.get("f1_threshold", c.metrics.f1_threshold);
        mr.finish();
    }

    if (const json* e = r.sub("experiment")) c.experiment = parse_experiment(*e, c.seed);

    r.finish();
    validate(c);
    return c;
}

ScenarioConfig load_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("scenario: invalid JSON: ") + e.what());
    }
    return scenario_from_json(j);
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("scenario: cannot open file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_scenario(ss.str());
}

namespace {

json surface_map_json(const std::array<double, kNumSurfaces>& m) {
    return json{{"home", m[0]}, {"grid", m[1]}, {"scroll", m[2]}};
}
json surface_map_json(const std::array<int, kNumSurfaces>& m) {
    return json{{"home", m[0]}, {"grid", m[1]}, {"scroll", m[2]}};
}

}  // namespace

json scenario_to_json(const ScenarioConfig& c) {
    json genres = json::array();
    for (const auto& g : c.genres) {
        json jg{{"name", g.name}, {"prior", g.prior}, {"base_appeal", g.base_appeal}};
        if (g.time_sensitive())
            jg["half_life_h"] = g.half_life_ticks / static_cast<double>(kTicksPerHour);
        else
            jg["half_life_h"] = "infinite";
        genres.push_back(std::move(jg));
    }

    json j{
        {"seed", c.seed},
        {"population",
         {{"users", c.users}, {"contents_per_day", c.contents_per_day}, {"days", c.days}}},
        {"genres", std::move(genres)},
        {"init_strategy", to_string(c.init_strategy)},
        {"embedding",
         {{"dim", c.embedding.dim},
          {"sigma", c.embedding.sigma},
          {"eta0", c.embedding.eta0},
          {"k0", c.embedding.k0},
          {"noise_scale", c.embedding.noise_scale},
          {"high_view_threshold", c.embedding.high_view_threshold},
          {"model_fidelity", c.embedding.model_fidelity},
          {"update_every_plays", c.embedding.update_every_plays}}},
        {"behavior",
         {{"b_home", c.behavior.b_home},
          {"b_grid", c.behavior.b_grid},
          {"affinity_gain", c.behavior.affinity_gain},
          {"watch_base", c.behavior.watch_base},
          {"watch_gain", c.behavior.watch_gain},
          {"watch_concentration", c.behavior.watch_concentration},
          {"engage_bias", c.behavior.engage_bias},
          {"engage_gain", c.behavior.engage_gain}}},
        {"serving",
         {{"views_min", c.serving.views_min},
          {"latency_target_h", c.serving.latency_target_h},
          {"overdue_boost", c.serving.overdue_boost},
          {"fresh_slots", surface_map_json(c.serving.fresh_slots)},
          {"page_size", surface_map_json(c.serving.page_size)},
          {"epsilon", c.serving.epsilon},
          {"surface_mix", surface_map_json(c.serving.surface_mix)},
          {"home_scan_depth_mean", c.serving.home_scan_depth_mean},
          {"scroll_stop_prob", c.serving.scroll_stop_prob},
          {"candidate_sample", c.serving.candidate_sample},
          {"throttle_fraction", c.serving.throttle_fraction},
          {"throttle_factor", c.serving.throttle_factor}}},
        {"lifecycle",
         {{"maturity_tau", c.lifecycle.maturity_tau},
          {"tau_mode", c.tau_population_mean ? "population_mean" : "fixed"},
          {"ttl_days", static_cast<double>(c.lifecycle.ttl_ticks) / kTicksPerDay},
          {"activity_floor_views", c.lifecycle.activity_floor_views},
          {"activity_window_h",
           static_cast<double>(c.lifecycle.activity_window_ticks) / kTicksPerHour}}},
        {"generator",
         {{"user_noise", c.generator.user_noise},
          {"content_noise", c.generator.content_noise},
          {"feature_dim", c.generator.feature_dim},
          {"feature_noise", c.generator.feature_noise},
          {"activity_rate_mean", c.generator.activity_rate_mean},
          {"duration_min_s", c.generator.duration_min_s},
          {"duration_max_s", c.generator.duration_max_s}}},
    };

    json csr = json::array();
    for (const auto& s : c.metrics.csr_specs)
        csr.push_back({{"y", s.y},
                       {"x", s.x},
                       {"t_h", static_cast<double>(s.t) / kTicksPerHour},
                       {"t_prime_h", static_cast<double>(s.t_prime) / kTicksPerHour}});
    json edges = json::array();
    for (Tick t : c.metrics.latency_bucket_edges)
        edges.push_back(static_cast<double>(t) / kTicksPerHour);
    j["metrics"] = {{"cvp_thresholds", c.metrics.cvp_thresholds},
                    {"csr", std::move(csr)},
                    {"latency_bucket_edges_h", std::move(edges)},
                    {"latency_cvp_x", c.metrics.latency_cvp_x},
                    {"f1_threshold", c.metrics.f1_threshold}};

    if (c.experiment) {
        const auto& p = *c.experiment;
        json arms = json::array();
        for (const auto& a : p.arms)
            arms.push_back(
                {{"label", a.label}, {"weight", a.weight}, {"overrides", a.overrides}});
        j["experiment"] = {
            {"design", to_string(p.design)},
            {"salt", p.salt},
            {"confinement_scope",
             p.scope == ConfinementScope::AllStages ? "all_stages" : "early_only"},
            {"replicate_seeds", p.replicate_seeds},
            {"arms", std::move(arms)}};
    }
    return j;
}

std::string serialize_scenario(const ScenarioConfig& cfg) {
    return scenario_to_json(cfg).dump(2) + "\n";
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
    return scenario_to_json(a) == scenario_to_json(b);
}

namespace {

const std::set<std::string>& user_scoped_paths() {
    static const std::set<std::string> paths{
        "behavior",
        "serving.fresh_slots",
        "serving.page_size",
        "serving.epsilon",
        "serving.surface_mix",
        "serving.home_scan_depth_mean",
        "serving.scroll_stop_prob",
        "serving.candidate_sample",
    };
    return paths;
}

void check_user_scoped(const json& overrides, const std::string& prefix) {
    for (auto it = overrides.begin(); it != overrides.end(); ++it) {
        std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (user_scoped_paths().contains(path)) continue;
        if (it.value().is_object()) {
            check_user_scoped(it.value(), path);
            continue;
        }
        throw ScenarioError(
            "experiment override '" + path +
            "' is a global knob: under a user-level split both arms share one content "
            "corpus and one exposure budget, so per-arm values cannot be honored");
    }
}

void check_never_overridden(const json& overrides) {
    for (const char* key : {"seed", "population", "genres", "metrics", "experiment"})
        if (overrides.contains(key))
            throw ScenarioError(std::string("experiment override '") + key +
                                "' is not a treatment knob");
}

}  // namespace

ScenarioConfig apply_overrides(const ScenarioConfig& base, const json& overrides,
                               bool user_scoped_only) {
    if (!overrides.is_object())
        throw ScenarioError("experiment overrides: expected an object");
    check_never_overridden(overrides);
    if (user_scoped_only) check_user_scoped(overrides, "");
    json j = scenario_to_json(base);
    j.erase("experiment");  // arms never nest further plans
    j.merge_patch(overrides);
    return scenario_from_json(j);
}

ScenarioConfig default_scenario() {
    ScenarioConfig c;
    c.seed = 1;
    c.genres = {
        {"news", 0.15, 6.0 * kTicksPerHour, 0.6},
        {"humor", 0.25, std::numeric_limits<double>::infinity(), 0.7},
        {"romance", 0.20, std::numeric_limits<double>::infinity(), 0.8},
        {"devotion", 0.15, std::numeric_limits<double>::infinity(), 0.5},
        {"sports", 0.15, 24.0 * kTicksPerHour, 0.6},
        {"education", 0.10, std::numeric_limits<double>::infinity(), 0.4},
    };
    return c;
}

}  // namespace fcsim
