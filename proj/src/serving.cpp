#include "fcsim/serving.hpp"

#include <algorithm>
#include <cmath>

namespace fcsim {

double fresh_priority(const ContentState& c, Tick now, const ServingConfig& cfg) {
    if (c.views >= cfg.views_min) return 0.0;
    const double deficit = static_cast<double>(cfg.views_min - c.views);
    const Tick deadline = c.created_at + cfg.latency_target_ticks();
    const Tick remaining = deadline - now;
    if (remaining <= 0) return deficit * cfg.overdue_boost;
    return deficit / static_cast<double>(std::max<Tick>(remaining, 1));
}

std::vector<uint32_t> rank_candidates(const UserProfile& u, std::span<const uint32_t> pool,
                                      const std::vector<ContentState>& contents,
                                      double epsilon, Rng& rng) {
    std::vector<std::pair<double, uint32_t>> scored;
    scored.reserve(pool.size());
    for (uint32_t id : pool)
        scored.emplace_back(cosine_similarity(u.embedding, contents[id].est_embedding), id);

    std::vector<uint32_t> out;
    out.reserve(scored.size());
    while (!scored.empty()) {
        size_t pick = 0;
        if (epsilon > 0.0 && rng.uniform() < epsilon) {
            pick = static_cast<size_t>(rng.uniform_int(scored.size()));
        } else {
            for (size_t i = 1; i < scored.size(); ++i) {
                if (scored[i].first > scored[pick].first ||
                    (scored[i].first == scored[pick].first &&
                     scored[i].second < scored[pick].second))
                    pick = i;
            }
        }
        out.push_back(scored[pick].second);
        scored.erase(scored.begin() + static_cast<ptrdiff_t>(pick));
    }
    return out;
}

FeedPage build_feed(const UserProfile& u, Surface surface,
                    std::span<const uint32_t> fresh_pool,
                    std::span<const uint32_t> ranked_pool,
                    const std::vector<ContentState>& contents, Tick now, Rng& rng,
                    const ServingConfig& cfg) {
    FeedPage page;
    page.user_id = u.id;
    page.surface = surface;
    const auto si = static_cast<size_t>(surface);
    const int page_size = cfg.page_size[si];

    // fresh slots: descending priority, ties to the lower id. Throttled
    // content is rate-limited by gating its page eligibility, so its pacing
    // slows down even when slots would otherwise go idle.
    std::vector<std::pair<double, uint32_t>> fresh;
    for (uint32_t id : fresh_pool) {
        if (contents[id].throttled && !rng.bernoulli(cfg.throttle_factor)) continue;
        double pr = fresh_priority(contents[id], now, cfg);
        if (pr > 0.0) fresh.emplace_back(pr, id);
    }
    std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    const int n_fresh = std::min<int>(cfg.fresh_slots[si], static_cast<int>(fresh.size()));
    for (int i = 0; i < n_fresh; ++i)
        page.slots.push_back({fresh[static_cast<size_t>(i)].second, SlotTag::Fresh});

    auto ranked = rank_candidates(u, ranked_pool, contents, cfg.epsilon, rng);
    for (uint32_t id : ranked) {
        if (static_cast<int>(page.slots.size()) >= page_size) break;
        // a content already holding a fresh slot cannot repeat on the page
        bool dup = false;
        for (int i = 0; i < n_fresh; ++i)
            if (page.slots[static_cast<size_t>(i)].content_id == id) dup = true;
        if (dup) continue;
        page.slots.push_back({id, SlotTag::Ranked});
    }
    return page;
}

namespace {

// Number of slots the user actually looks at, per surface attention model.
int scan_depth(Surface surface, int page_len, Rng& rng, const ServingConfig& cfg) {
    switch (surface) {
        case Surface::Grid:
            return page_len;  // whole grid visible at once
        case Surface::Home: {
            int depth = std::min(page_len, 2);  // two videos visible on screen
            const double m = cfg.home_scan_depth_mean;
            if (m > 0.0) {
                const double cont = m / (1.0 + m);  // geometric, mean m extra items
                while (depth < page_len && rng.bernoulli(cont)) ++depth;
            }
            return depth;
        }
        case Surface::Scroll: {
            int depth = 0;
            while (depth < page_len) {
                ++depth;
                if (rng.bernoulli(cfg.scroll_stop_prob)) break;
            }
            return depth;
        }
    }
    return 0;
}

}  // namespace

std::vector<ImpressionEvent> record_impression(const FeedPage& page, const UserProfile& u,
                                               std::vector<ContentState>& contents,
                                               std::span<const GenreSpec> genres, Tick now,
                                               Rng& rng, const ServingConfig& cfg,
                                               const BehaviorParams& behavior,
                                               const EmbeddingConfig& emb_cfg) {
    std::vector<ImpressionEvent> events;
    const int depth = scan_depth(page.surface, static_cast<int>(page.slots.size()), rng, cfg);
    events.reserve(static_cast<size_t>(depth));

    for (int pos = 0; pos < depth; ++pos) {
        const auto& slot = page.slots[static_cast<size_t>(pos)];
        ContentState& c = contents[slot.content_id];
        const GenreSpec& genre = genres[c.genre];

        ImpressionEvent ev;
        ev.tick = now;
        ev.user_id = u.id;
        ev.content_id = c.id;
        ev.surface = page.surface;
        ev.position = static_cast<uint16_t>(pos);
        ev.fresh = slot.tag == SlotTag::Fresh;
        ev.stage = c.stage;
        ev.arm = u.arm;

        const double aff = affinity(u, c);
        const double rel = relevance(genre, static_cast<double>(now - c.created_at));
        if (rng.bernoulli(play_probability(page.surface, aff, rel, genre.base_appeal, behavior))) {
            ev.played = true;
            ev.watch_time_s = sample_watch(rng, aff, rel, c.duration_s, behavior);
            ev.outcome = classify_watch(ev.watch_time_s, c.duration_s);
            ev.engaged = sample_engagement(rng, *ev.outcome, aff, rel, behavior);

            c.record_play(now);
            if (!c.min_views_met_at && c.views >= cfg.views_min) c.min_views_met_at = now;
            if (++c.plays_since_update >= emb_cfg.update_every_plays) {
                c.plays_since_update = 0;
                c.est_embedding =
                    update_embedding(c.est_embedding, c.true_embedding, c.update_count, rng, emb_cfg);
                ++c.update_count;
            }
        }
        events.push_back(std::move(ev));
    }
    return events;
}

}  // namespace fcsim
