#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcsim/experiments.hpp"
#include "fcsim/metrics.hpp"
#include "fcsim/scenario.hpp"

namespace fcsim {

// Fully resolved per-arm treatment (base scenario + arm overrides).
struct ResolvedArm {
    std::string label;
    double weight = 1.0;
    InitStrategy init_strategy = InitStrategy::Random;
    EmbeddingConfig embedding;
    BehaviorParams behavior;
    ServingConfig serving;
    LifecycleConfig lifecycle;
};

struct SimResult {
    ScenarioConfig scenario;
    Design design = Design::FullRollout;
    std::vector<std::string> arm_labels;
    std::vector<ImpressionEvent> events;  // ordered by (tick, seq)
    std::vector<ContentState> contents;
    std::vector<UserProfile> users;
    std::vector<ExposureRow> exposure;  // one row per arm
};

// Single-threaded deterministic event loop: one run, one seed, one event log.
SimResult run_simulation(const ScenarioConfig& cfg);

// Resolves the experiment plan (or a single implicit arm) against the base
// scenario, validating overrides for the design.
std::vector<ResolvedArm> resolve_arms(const ScenarioConfig& cfg);

// Whole-run ledger straight from the content view counters.
ViewLedger ledger_from_contents(std::span<const ContentState> contents,
                                std::span<const GenreSpec> genres);

// Per-arm ledger rebuilt from arm-attributed events (views a user in `arm`
// actually delivered).
ViewLedger arm_ledger_from_events(const SimResult& result, int16_t arm, uint64_t views_min);

MetricReport compute_report(const ViewLedger& ledger, std::span<const ImpressionEvent> events,
                            const MetricsConfig& metrics, uint64_t views_min,
                            std::string arm_label,
                            std::optional<uint64_t> fetches = std::nullopt);

// Report for the whole run (all arms pooled).
MetricReport report_from_result(const SimResult& result);

}  // namespace fcsim
