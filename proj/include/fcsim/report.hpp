#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fcsim/experiments.hpp"
#include "fcsim/metrics.hpp"

namespace fcsim {

// Flat-table headers, locked by golden-file tests.
inline constexpr const char* kCvpCurveHeader = "threshold,cvp";
inline constexpr const char* kCsrCurveHeader = "y,x,t_ticks,t_prime_ticks,csr";
inline constexpr const char* kLatencyCurveHeader = "genre,bucket_lo_ticks,bucket_hi_ticks,count,cvp";
inline constexpr const char* kDeltaHeader = "metric,arm_a,arm_b,delta";
inline constexpr const char* kBiasHeader = "metric,experiment_delta,truth_delta,bias";
inline constexpr const char* kSweepHeader = "knob_value,metric,value";

nlohmann::json report_to_json(const MetricReport& report);
MetricReport report_from_json(const nlohmann::json& j);

// report.json plus one CSV per figure-style curve. Undefined values render
// as "n/a".
void emit_report(const MetricReport& report, const std::string& dir);

// report_<arm>.json per arm plus a pairwise deltas.csv.
void emit_arm_reports(const std::vector<ArmReport>& arms, const std::string& dir);

void emit_bias_table(const std::vector<BiasRow>& rows, const std::string& dir);

std::string render_optional(const std::optional<double>& v);

// Flattened scalar view of a report: ("cvp@500", value), ... Used for the
// delta and sweep tables.
std::vector<std::pair<std::string, std::optional<double>>> named_metrics(const MetricReport& r);

}  // namespace fcsim
