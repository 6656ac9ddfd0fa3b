#include "fcsim/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace fcsim {

std::optional<double> cvp(const ViewLedger& ledger, int64_t x, int64_t y) {
    if (x < 0 || y < 0) throw std::invalid_argument("cvp: negative threshold");
    uint64_t denom = 0, numer = 0;
    for (const auto& e : ledger.entries) {
        const uint64_t v = e.final_views();
        if (v >= static_cast<uint64_t>(y)) {
            ++denom;
            if (v >= static_cast<uint64_t>(x)) ++numer;
        }
    }
    if (denom == 0) return std::nullopt;
    return static_cast<double>(numer) / static_cast<double>(denom);
}

std::optional<double> csr(const ViewLedger& ledger, int64_t y, int64_t x, Tick t, Tick t_prime) {
    if (x <= 0) throw std::invalid_argument("csr: activity bar x must be positive");
    if (y < 0) throw std::invalid_argument("csr: negative threshold");
    if (t < 0 || t_prime < 0) throw std::invalid_argument("csr: negative time");
    uint64_t denom = 0, numer = 0;
    for (const auto& e : ledger.entries) {
        const uint64_t vt = e.views_at(t);
        if (vt < static_cast<uint64_t>(y)) continue;
        ++denom;
        const uint64_t gain = e.views_at(t + t_prime) - vt;
        if (gain >= static_cast<uint64_t>(x)) ++numer;
    }
    if (denom == 0) return std::nullopt;
    return static_cast<double>(numer) / static_cast<double>(denom);
}

std::optional<double> auc(std::span<const std::pair<double, int>> scored) {
    std::vector<std::pair<double, int>> s(scored.begin(), scored.end());
    std::sort(s.begin(), s.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    uint64_t pos = 0, neg = 0;
    for (const auto& [score, label] : s) (label ? pos : neg)++;
    if (pos == 0 || neg == 0) return std::nullopt;

    // midrank sum over positives
    double rank_sum = 0.0;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i;
        while (j < s.size() && s[j].first == s[i].first) ++j;
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);  // ranks are 1-based
        for (size_t k = i; k < j; ++k)
            if (s[k].second) rank_sum += midrank;
        i = j;
    }
    const double p = static_cast<double>(pos);
    return (rank_sum - p * (p + 1.0) / 2.0) / (p * static_cast<double>(neg));
}

double f1(std::span<const int> predictions, std::span<const int> labels) {
    if (predictions.size() != labels.size() || predictions.empty())
        throw std::invalid_argument("f1: inputs must be non-empty and equal-sized");
    uint64_t tp = 0, fp = 0, fn = 0;
    for (size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i] && labels[i]) ++tp;
        else if (predictions[i]) ++fp;
        else if (labels[i]) ++fn;
    }
    if (tp == 0) return 0.0;
    const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    return 2.0 * precision * recall / (precision + recall);
}

double f1_from_scores(std::span<const std::pair<double, int>> scored, double threshold) {
    std::vector<int> preds, labels;
    preds.reserve(scored.size());
    labels.reserve(scored.size());
    for (const auto& [score, label] : scored) {
        preds.push_back(score > threshold ? 1 : 0);
        labels.push_back(label);
    }
    return f1(preds, labels);
}

std::optional<double> rela_impr(double auc_model, double auc_base) {
    if (auc_base <= 0.5) return std::nullopt;
    return ((auc_model - 0.5) / (auc_base - 0.5) - 1.0) * 100.0;
}

std::vector<LatencyBucket> cvp_by_latency_bucket(const ViewLedger& ledger,
                                                 const std::string& genre, int64_t x,
                                                 std::span<const Tick> bucket_edges) {
    if (bucket_edges.size() < 2)
        throw std::invalid_argument("cvp_by_latency_bucket: need at least two bucket edges");
    std::vector<LatencyBucket> buckets;
    for (size_t i = 0; i + 1 < bucket_edges.size(); ++i)
        buckets.push_back({bucket_edges[i], bucket_edges[i + 1], 0, std::nullopt});

    std::vector<uint64_t> numer(buckets.size(), 0);
    for (const auto& e : ledger.entries) {
        if (e.genre != genre || !e.min_views_met_at) continue;
        const Tick latency = *e.min_views_met_at - e.created_at;
        for (size_t i = 0; i < buckets.size(); ++i) {
            if (latency >= buckets[i].lo && latency < buckets[i].hi) {
                ++buckets[i].count;
                if (e.final_views() >= static_cast<uint64_t>(x)) ++numer[i];
                break;
            }
        }
    }
    for (size_t i = 0; i < buckets.size(); ++i)
        if (buckets[i].count > 0)
            buckets[i].value = static_cast<double>(numer[i]) / static_cast<double>(buckets[i].count);
    return buckets;
}

SatisfactionRates satisfaction_rates(std::span<const ImpressionEvent> events) {
    uint64_t plays = 0, successes = 0, engagements = 0;
    for (const auto& ev : events) {
        if (!ev.played) continue;
        ++plays;
        if (ev.outcome == WatchOutcome::Successful) ++successes;
        if (ev.engaged) ++engagements;
    }
    SatisfactionRates r;
    if (plays > 0) {
        r.engagement_per_view = static_cast<double>(engagements) / static_cast<double>(plays);
        r.successful_play_rate = static_cast<double>(successes) / static_cast<double>(plays);
    }
    return r;
}

uint64_t delivered_fetches(std::span<const ImpressionEvent> events) {
    std::unordered_set<uint64_t> pages;
    for (const auto& ev : events)
        pages.insert((static_cast<uint64_t>(ev.tick) << 32) | ev.user_id);
    return pages.size();
}

void StreamingStats::register_content(uint32_t id, std::string genre, Tick created_at,
                                      uint64_t views_min) {
    if (index_.contains(id)) return;
    index_[id] = entries_.size();
    LedgerEntry e;
    e.content_id = id;
    e.genre = std::move(genre);
    e.created_at = created_at;
    entries_.push_back(std::move(e));
    views_min_.push_back(views_min);
}

void StreamingStats::add(const ImpressionEvent& ev) {
    if (!ev.played) return;
    ++plays_;
    if (ev.outcome == WatchOutcome::Successful) ++successes_;
    if (ev.engaged) ++engagements_;

    auto it = index_.find(ev.content_id);
    if (it == index_.end())
        throw std::invalid_argument("StreamingStats: event for unregistered content");
    LedgerEntry& e = entries_[it->second];
    const uint64_t v = e.final_views() + 1;
    if (!e.view_series.empty() && e.view_series.back().first == ev.tick)
        e.view_series.back().second = v;
    else
        e.view_series.emplace_back(ev.tick, v);
    if (!e.min_views_met_at && v >= views_min_[it->second]) e.min_views_met_at = ev.tick;
}

ViewLedger StreamingStats::ledger() const { return ViewLedger{entries_}; }

SatisfactionRates StreamingStats::satisfaction() const {
    SatisfactionRates r;
    if (plays_ > 0) {
        r.engagement_per_view = static_cast<double>(engagements_) / static_cast<double>(plays_);
        r.successful_play_rate = static_cast<double>(successes_) / static_cast<double>(plays_);
    }
    return r;
}

}  // namespace fcsim
