#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fcsim/domain.hpp"
#include "fcsim/metrics.hpp"

namespace fcsim {

struct ScenarioConfig;  // scenario.hpp

enum class Design : uint8_t { UserLevel, UserContent, ParallelLifecycle, FullRollout };

// Whether user-content confinement applies at every stage or only while
// content is Early (the corpus is shared afterwards).
enum class ConfinementScope : uint8_t { AllStages, EarlyOnly };

const char* to_string(Design d);
Design design_from_string(const std::string& s);

struct ArmSpec {
    std::string label;
    double weight = 0.0;
    nlohmann::json overrides = nlohmann::json::object();  // scenario subtree patches
};

struct ExperimentPlan {
    Design design = Design::UserLevel;
    std::string salt;
    std::vector<ArmSpec> arms;
    std::vector<uint64_t> replicate_seeds;
    ConfinementScope scope = ConfinementScope::AllStages;
};

// Stable hash bucketing of (salt, entity_id) into cumulative weight buckets.
int assign_arm(uint64_t entity_id, std::string_view salt, std::span<const double> weights);

// May this user see this content, given the content's current stage?
bool route_visibility(Design design, int16_t user_arm, const ContentState& c, Stage stage,
                      ConfinementScope scope = ConfinementScope::AllStages);

struct ExposureRow {
    std::string arm;
    uint64_t views = 0;
    uint64_t fresh_views = 0;
    uint64_t ranked_views = 0;  // views delivered outside reserved slots (leakage column)
    std::array<uint64_t, kNumStages> views_by_stage{};
    uint64_t fetches = 0;
};

struct ArmReport {
    std::string label;
    MetricReport mean;    // across replicates
    MetricReport stddev;  // replicate standard deviation (same shape)
    std::vector<MetricReport> replicates;
    ExposureRow exposure;  // summed across replicates
};

// Runs the plan: one simulation per replicate seed with per-arm treatment
// overrides applied at the stages the design governs.
std::vector<ArmReport> run_experiment(const ExperimentPlan& plan, const ScenarioConfig& base);

struct BiasRow {
    std::string metric;
    double experiment_delta = 0.0;
    double truth_delta = 0.0;
    double bias = 0.0;  // |experiment_delta - truth_delta|
    bool defined = true;
};

// Ground truth = two FullRollout counterfactual runs (one per treatment)
// sharing every seed except the treatment knob.
std::vector<BiasRow> estimate_bias(const std::vector<ArmReport>& experiment_arms,
                                   const ArmReport& truth_a, const ArmReport& truth_b);

// Runs the two full-rollout counterfactuals for a 2-arm plan and returns
// the per-metric bias table.
std::vector<BiasRow> run_bias_analysis(const ExperimentPlan& plan, const ScenarioConfig& base,
                                       std::vector<ArmReport>* out_experiment = nullptr,
                                       std::vector<ArmReport>* out_truth = nullptr);

// Offline evaluation of the three initializers on a held-out synthetic
// impression log: score = cos(user, initialized embedding), label =
// successful play under the behavior model.
OfflineReport run_offline_eval(const ScenarioConfig& cfg, uint64_t seed, size_t n_impressions);

}  // namespace fcsim
