#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcsim/vec.hpp"

namespace fcsim {

// Simulation time. One tick = 10 simulated minutes.
using Tick = std::int64_t;

inline constexpr Tick kTicksPerHour = 6;
inline constexpr Tick kTicksPerDay = 24 * kTicksPerHour;

inline Tick hours_to_ticks(double h) {
    return static_cast<Tick>(std::llround(h * static_cast<double>(kTicksPerHour)));
}

enum class Stage : uint8_t { Early = 0, Growth = 1, Mature = 2, Expired = 3 };
enum class Surface : uint8_t { Home = 0, Grid = 1, Scroll = 2 };
enum class WatchOutcome : uint8_t { Successful, Skip, Partial };

inline constexpr int kNumSurfaces = 3;
inline constexpr int kNumStages = 4;

const char* to_string(Stage s);
const char* to_string(Surface s);
const char* to_string(WatchOutcome o);
Stage stage_from_string(const std::string& s);
Surface surface_from_string(const std::string& s);
WatchOutcome outcome_from_string(const std::string& s);

struct GenreSpec {
    std::string name;
    double prior = 0.0;        // fraction of new content created in this genre
    double half_life_ticks = std::numeric_limits<double>::infinity();
    double base_appeal = 0.5;  // in [0, 1]

    bool time_sensitive() const { return std::isfinite(half_life_ticks); }
};

struct ContentFeatures {
    Vec values;  // noisy linear image of true_embedding, dimension F
};

// No-arm marker for experiment labels.
inline constexpr int16_t kNoArm = -1;

struct ContentState {
    uint32_t id = 0;
    uint16_t genre = 0;  // index into the scenario genre table
    Tick created_at = 0;
    double duration_s = 0.0;
    Vec true_embedding;  // unit norm
    Vec est_embedding;
    ContentFeatures features;
    uint64_t views = 0;
    std::vector<std::pair<Tick, uint64_t>> view_series;  // (tick, cumulative views)
    Stage stage = Stage::Early;
    std::optional<Tick> min_views_met_at;

    // serving/experiment bookkeeping
    uint32_t plays_since_update = 0;
    uint32_t update_count = 0;
    bool in_genre_index = false;
    bool throttled = false;
    // arm per live stage; a single-arm design stores the same label thrice
    std::array<int16_t, 3> stage_arm{kNoArm, kNoArm, kNoArm};

    int16_t arm_for(Stage s) const {
        return s == Stage::Expired ? kNoArm : stage_arm[static_cast<size_t>(s)];
    }

    // Appends to view_series, coalescing entries within the same tick.
    void record_play(Tick now);

    // Cumulative views at the latest series tick <= t (step interpolation).
    uint64_t views_at(Tick t) const;
};

struct UserProfile {
    uint32_t id = 0;
    Vec embedding;               // unit norm
    double activity_rate = 0.0;  // expected feed fetches per tick
    int16_t arm = kNoArm;
};

struct ImpressionEvent {
    Tick tick = 0;
    uint64_t seq = 0;  // stable order within a tick
    uint32_t user_id = 0;
    uint32_t content_id = 0;
    Surface surface = Surface::Home;
    uint16_t position = 0;
    bool fresh = false;  // served from a reserved fresh slot
    Stage stage = Stage::Early;  // content stage at impression time
    bool played = false;
    double watch_time_s = 0.0;
    std::optional<WatchOutcome> outcome;  // present iff played
    bool engaged = false;
    int16_t arm = kNoArm;  // user arm
};

struct LifecycleConfig {
    uint64_t views_min = 200;  // mirrored from ServingConfig at scenario load
    double maturity_tau = 0.2;
    Tick ttl_ticks = 30 * kTicksPerDay;
    double activity_floor_views = 1.0;
    Tick activity_window_ticks = 72 * kTicksPerHour;
};

// Successful if watch_time > 0.98 * duration, Skip if watch_time < 3s,
// Partial otherwise. Successful wins when both rules fire (ultra-short
// videos). Throws std::invalid_argument on negative watch time or
// nonpositive duration.
WatchOutcome classify_watch(double watch_time_s, double duration_s);

// 2^(-age / half_life); 1.0 for timeless genres. age in ticks, >= 0.
double relevance(const GenreSpec& genre, double age_ticks);

// One forward step of the lifecycle chain. Never moves backward.
Stage lifecycle_transition(const ContentState& c, Tick now, const LifecycleConfig& cfg);

}  // namespace fcsim
