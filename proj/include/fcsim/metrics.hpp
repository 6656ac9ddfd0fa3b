#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcsim/domain.hpp"

namespace fcsim {

// Per-content view history, the substrate for CVP/CSR. Undefined ratios
// (empty denominators) are std::nullopt, never silently zero.
struct LedgerEntry {
    uint32_t content_id = 0;
    std::string genre;
    Tick created_at = 0;
    std::vector<std::pair<Tick, uint64_t>> view_series;
    std::optional<Tick> min_views_met_at;

    uint64_t final_views() const { return view_series.empty() ? 0 : view_series.back().second; }

    // step interpolation: views at the latest tick <= t
    uint64_t views_at(Tick t) const {
        uint64_t v = 0;
        for (const auto& [tick, cum] : view_series) {
            if (tick > t) break;
            v = cum;
        }
        return v;
    }
};

struct ViewLedger {
    std::vector<LedgerEntry> entries;
};

// CVP(x | y) = |{c : v(c) >= x, v(c) >= y}| / |{c : v(c) >= y}|.
// Negative thresholds throw; empty denominator is nullopt.
std::optional<double> cvp(const ViewLedger& ledger, int64_t x, int64_t y);

// CSR: numerator {c : v(c, t+t') - v(c, t) >= x} intersected with the
// denominator set {c : v(c, t) >= y}, so the ratio is a probability.
std::optional<double> csr(const ViewLedger& ledger, int64_t y, int64_t x, Tick t, Tick t_prime);

// ROC-AUC via the rank statistic; ties count 1/2. Single-class input is nullopt.
std::optional<double> auc(std::span<const std::pair<double, int>> scored);

// Harmonic mean of precision and recall; 0 when P + R degenerates.
double f1(std::span<const int> predictions, std::span<const int> labels);

// F1 after thresholding scores at `threshold`.
double f1_from_scores(std::span<const std::pair<double, int>> scored, double threshold = 0.5);

// ((auc_model - 0.5) / (auc_base - 0.5) - 1) * 100; nullopt at or below the
// random floor.
std::optional<double> rela_impr(double auc_model, double auc_base);

struct LatencyBucket {
    Tick lo = 0;
    Tick hi = 0;  // half-open [lo, hi)
    uint64_t count = 0;
    std::optional<double> value;
};

// CVP(x | views_min) restricted to contents of `genre` whose delivery
// latency (min_views_met_at - created_at) lands in each bucket.
std::vector<LatencyBucket> cvp_by_latency_bucket(const ViewLedger& ledger,
                                                 const std::string& genre, int64_t x,
                                                 std::span<const Tick> bucket_edges);

struct SatisfactionRates {
    std::optional<double> engagement_per_view;
    std::optional<double> successful_play_rate;
};

SatisfactionRates satisfaction_rates(std::span<const ImpressionEvent> events);

// Fetches that delivered at least one impression: distinct (tick, user)
// pairs. Keeps every report metric recomputable from the log alone.
uint64_t delivered_fetches(std::span<const ImpressionEvent> events);

struct OfflineAlgoMetrics {
    std::string algo;
    std::optional<double> auc;
    std::optional<double> f1;
    std::optional<double> rela_impr;  // against the report's baseline algo
};

struct OfflineReport {
    std::string baseline_algo;
    std::vector<OfflineAlgoMetrics> algos;
};

struct MetricReport {
    std::string arm;
    uint64_t views_min = 0;
    std::vector<std::pair<int64_t, std::optional<double>>> cvp_curve;  // threshold -> CVP(x|views_min)
    struct CsrPoint {
        int64_t y = 0;
        int64_t x = 0;
        Tick t = 0;
        Tick t_prime = 0;
        std::optional<double> value;
    };
    std::vector<CsrPoint> csr_curve;
    std::optional<double> engagement_per_view;
    std::optional<double> successful_play_rate;
    std::optional<double> engagement_per_fetch;  // volume metric for surface comparisons
    struct GenreLatency {
        std::string genre;
        std::vector<LatencyBucket> buckets;
    };
    std::vector<GenreLatency> genre_latency;
    std::optional<OfflineReport> offline;
};

// Incremental (one event at a time) counterpart of the full-log
// recomputation above. register_content must precede events for that id.
class StreamingStats {
public:
    void register_content(uint32_t id, std::string genre, Tick created_at, uint64_t views_min);
    void add(const ImpressionEvent& ev);

    ViewLedger ledger() const;
    SatisfactionRates satisfaction() const;

private:
    std::unordered_map<uint32_t, size_t> index_;
    std::vector<LedgerEntry> entries_;
    std::vector<uint64_t> views_min_;
    uint64_t plays_ = 0;
    uint64_t successes_ = 0;
    uint64_t engagements_ = 0;
};

}  // namespace fcsim
