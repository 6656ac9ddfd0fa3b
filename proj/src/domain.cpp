#include "fcsim/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace fcsim {

const char* to_string(Stage s) {
    switch (s) {
        case Stage::Early: return "early";
        case Stage::Growth: return "growth";
        case Stage::Mature: return "mature";
        case Stage::Expired: return "expired";
    }
    return "?";
}

const char* to_string(Surface s) {
    switch (s) {
        case Surface::Home: return "home";
        case Surface::Grid: return "grid";
        case Surface::Scroll: return "scroll";
    }
    return "?";
}

const char* to_string(WatchOutcome o) {
    switch (o) {
        case WatchOutcome::Successful: return "success";
        case WatchOutcome::Skip: return "skip";
        case WatchOutcome::Partial: return "partial";
    }
    return "?";
}

Stage stage_from_string(const std::string& s) {
    if (s == "early") return Stage::Early;
    if (s == "growth") return Stage::Growth;
    if (s == "mature") return Stage::Mature;
    if (s == "expired") return Stage::Expired;
    throw std::invalid_argument("unknown stage: " + s);
}

Surface surface_from_string(const std::string& s) {
    if (s == "home") return Surface::Home;
    if (s == "grid") return Surface::Grid;
    if (s == "scroll") return Surface::Scroll;
    throw std::invalid_argument("unknown surface: " + s);
}

WatchOutcome outcome_from_string(const std::string& s) {
    if (s == "success") return WatchOutcome::Successful;
    if (s == "skip") return WatchOutcome::Skip;
    if (s == "partial") return WatchOutcome::Partial;
    throw std::invalid_argument("unknown outcome: " + s);
}

void ContentState::record_play(Tick now) {
    ++views;
    if (!view_series.empty() && view_series.back().first == now) {
        view_series.back().second = views;
    } else {
        view_series.emplace_back(now, views);
    }
}

uint64_t ContentState::views_at(Tick t) const {
    uint64_t v = 0;
    for (const auto& [tick, cum] : view_series) {
        if (tick > t) break;
        v = cum;
    }
    return v;
}

WatchOutcome classify_watch(double watch_time_s, double duration_s) {
    if (duration_s <= 0.0) throw std::invalid_argument("classify_watch: duration must be positive");
    if (watch_time_s < 0.0) throw std::invalid_argument("classify_watch: negative watch time");
    if (watch_time_s > duration_s)
        throw std::invalid_argument("classify_watch: watch time exceeds duration");
    // A complete watch cannot be a skip, so Successful wins for ultra-short
    // videos where both thresholds fire.
    if (watch_time_s > 0.98 * duration_s) return WatchOutcome::Successful;
    if (watch_time_s < 3.0) return WatchOutcome::Skip;
    return WatchOutcome::Partial;
}

double relevance(const GenreSpec& genre, double age_ticks) {
    if (age_ticks < 0.0) throw std::invalid_argument("relevance: negative age");
    if (!genre.time_sensitive()) return 1.0;
    return std::exp2(-age_ticks / genre.half_life_ticks);
}

Stage lifecycle_transition(const ContentState& c, Tick now, const LifecycleConfig& cfg) {
    if (c.stage == Stage::Expired) return Stage::Expired;

    const Tick age = now - c.created_at;
    if (age > cfg.ttl_ticks) return Stage::Expired;
    if (age >= cfg.activity_window_ticks) {
        uint64_t gained = c.views_at(now) - c.views_at(now - cfg.activity_window_ticks);
        if (static_cast<double>(gained) < cfg.activity_floor_views) return Stage::Expired;
    }

    if (c.stage == Stage::Early && c.views >= cfg.views_min) return Stage::Growth;
    if (c.stage == Stage::Growth &&
        cosine_distance(c.est_embedding, c.true_embedding) <= cfg.maturity_tau)
        return Stage::Mature;
    return c.stage;
}

}  // namespace fcsim
