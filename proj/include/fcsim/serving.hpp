#pragma once

#include <array>
#include <span>
#include <vector>

#include "fcsim/behavior.hpp"
#include "fcsim/domain.hpp"
#include "fcsim/embeddings.hpp"
#include "fcsim/rng.hpp"

namespace fcsim {

struct ServingConfig {
    uint64_t views_min = 200;
    double latency_target_h = 48.0;
    double overdue_boost = 4.0;  // priority multiplier once past the deadline
    std::array<int, kNumSurfaces> fresh_slots{2, 4, 2};    // Home, Grid, Scroll
    std::array<int, kNumSurfaces> page_size{12, 16, 8};
    double epsilon = 0.1;  // exploration rate in mature ranking
    std::array<double, kNumSurfaces> surface_mix{0.4, 0.3, 0.3};
    double home_scan_depth_mean = 4.0;  // extra items scanned past the 2 visible
    double scroll_stop_prob = 0.1;      // per-video stop probability
    int candidate_sample = 64;          // ranked-pool subsample per fetch; 0 = full pool
    double throttle_fraction = 0.0;     // fraction of content paced at reduced priority
    double throttle_factor = 0.2;       // per-page fresh eligibility for throttled content

    Tick latency_target_ticks() const { return hours_to_ticks(latency_target_h); }
};

enum class SlotTag : uint8_t { Fresh, Ranked };

struct FeedPage {
    struct Slot {
        uint32_t content_id;
        SlotTag tag;
    };
    uint32_t user_id = 0;
    Surface surface = Surface::Home;
    std::vector<Slot> slots;
};

// Earliest-deadline-first with deficit weighting:
//   deficit / max(remaining, 1 tick), or deficit * overdue_boost past deadline.
// Zero once the budget is delivered.
double fresh_priority(const ContentState& c, Tick now, const ServingConfig& cfg);

// Epsilon-greedy per slot over cos(u, est_embedding); ties break to the
// lower content id.
std::vector<uint32_t> rank_candidates(const UserProfile& u, std::span<const uint32_t> pool,
                                      const std::vector<ContentState>& contents,
                                      double epsilon, Rng& rng);

// Fresh slots by descending fresh_priority, remaining slots by
// rank_candidates. Shorter page when pools run out, never an error.
FeedPage build_feed(const UserProfile& u, Surface surface,
                    std::span<const uint32_t> fresh_pool,
                    std::span<const uint32_t> ranked_pool,
                    const std::vector<ContentState>& contents, Tick now, Rng& rng,
                    const ServingConfig& cfg);

// Scans the page with the per-surface attention model, samples plays,
// watch times and engagement, and applies state updates (view counters,
// min-views crossing, embedding update cadence). Returns one event per
// scanned slot.
std::vector<ImpressionEvent> record_impression(const FeedPage& page, const UserProfile& u,
                                               std::vector<ContentState>& contents,
                                               std::span<const GenreSpec> genres, Tick now,
                                               Rng& rng, const ServingConfig& cfg,
                                               const BehaviorParams& behavior,
                                               const EmbeddingConfig& emb_cfg);

}  // namespace fcsim
