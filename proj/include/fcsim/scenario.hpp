#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fcsim/behavior.hpp"
#include "fcsim/domain.hpp"
#include "fcsim/embeddings.hpp"
#include "fcsim/experiments.hpp"
#include "fcsim/serving.hpp"

namespace fcsim {

enum class InitStrategy : uint8_t { Random, GenreAverage, ModelBased };

const char* to_string(InitStrategy s);
InitStrategy init_strategy_from_string(const std::string& s);

// Synthetic population generator knobs: they shape the ground-truth world
// that the serving and lifecycle choices act on.
struct GeneratorConfig {
    double user_noise = 0.6;  // spread of user embeddings around genre directions
    // genres are broad: within-genre item spread dominates the genre signal
    double content_noise = 0.9;
    int feature_dim = 16;
    double feature_noise = 0.1;
    double activity_rate_mean = 0.03;  // expected fetches per user per tick
    double duration_min_s = 5.0;
    double duration_max_s = 60.0;
};

struct MetricsConfig {
    std::vector<int64_t> cvp_thresholds{100, 200, 500, 1000};
    struct CsrSpec {
        int64_t y = 200;
        int64_t x = 20;
        Tick t = 4 * kTicksPerDay;
        Tick t_prime = 4 * kTicksPerDay;
    };
    std::vector<CsrSpec> csr_specs{CsrSpec{}};
    std::vector<Tick> latency_bucket_edges{0, 12 * kTicksPerHour, 24 * kTicksPerHour,
                                           48 * kTicksPerHour, 96 * kTicksPerHour};
    int64_t latency_cvp_x = 1000;  // the x in per-genre CVP(x | views_min) latency curves
    double f1_threshold = 0.5;
};

struct ScenarioConfig {
    uint64_t seed = 0;  // mandatory in scenario files, no wall-clock default
    int users = 1000;
    double contents_per_day = 50.0;
    int days = 7;
    std::vector<GenreSpec> genres;
    InitStrategy init_strategy = InitStrategy::Random;
    EmbeddingConfig embedding;
    BehaviorParams behavior;
    ServingConfig serving;
    LifecycleConfig lifecycle;       // views_min mirrored from serving at load
    bool tau_population_mean = false;  // recalibrate tau from the live population
    GeneratorConfig generator;
    MetricsConfig metrics;
    std::optional<ExperimentPlan> experiment;

    Tick total_ticks() const { return static_cast<Tick>(days) * kTicksPerDay; }
};

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse + validate. Unknown keys are rejected; violations name the key.
ScenarioConfig load_scenario(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);
ScenarioConfig scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioConfig& cfg);
std::string serialize_scenario(const ScenarioConfig& cfg);

// Deep-merges `overrides` into the scenario and revalidates. When
// `user_scoped_only` is set, overrides outside the user-scoped whitelist
// (feed layout, behavior) raise ScenarioError — those knobs are global
// under a user-level split and per-arm values would silently share budget.
ScenarioConfig apply_overrides(const ScenarioConfig& base, const nlohmann::json& overrides,
                               bool user_scoped_only = false);

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

// Default scenario used by tests and as the base the CLI fills in.
ScenarioConfig default_scenario();

}  // namespace fcsim
