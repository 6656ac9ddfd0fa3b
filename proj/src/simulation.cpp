#include "fcsim/simulation.hpp"

#include <algorithm>
#include <unordered_set>

#include "fcsim/serving.hpp"

namespace fcsim {

std::vector<ResolvedArm> resolve_arms(const ScenarioConfig& cfg) {
    std::vector<ResolvedArm> arms;
    if (!cfg.experiment) {
        ResolvedArm arm;
        arm.label = "all";
        arm.weight = 1.0;
        arm.init_strategy = cfg.init_strategy;
        arm.embedding = cfg.embedding;
        arm.behavior = cfg.behavior;
        arm.serving = cfg.serving;
        arm.lifecycle = cfg.lifecycle;
        arms.push_back(std::move(arm));
        return arms;
    }
    const ExperimentPlan& plan = *cfg.experiment;
    const bool user_scoped_only = plan.design == Design::UserLevel;
    for (const auto& spec : plan.arms) {
        ScenarioConfig eff = apply_overrides(cfg, spec.overrides, user_scoped_only);
        ResolvedArm arm;
        arm.label = spec.label;
        arm.weight = spec.weight;
        arm.init_strategy = eff.init_strategy;
        arm.embedding = eff.embedding;
        arm.behavior = eff.behavior;
        arm.serving = eff.serving;
        arm.lifecycle = eff.lifecycle;
        arms.push_back(std::move(arm));
    }
    return arms;
}

namespace {

class Engine {
public:
    explicit Engine(const ScenarioConfig& cfg)
        : cfg_(cfg),
          arms_(resolve_arms(cfg)),
          design_(cfg.experiment ? cfg.experiment->design : Design::FullRollout),
          // each replicate re-randomizes: fold the world seed into the salt so
          // arm partitions are independent draws across replicate seeds
          salt_(cfg.experiment ? cfg.experiment->salt + "#" + std::to_string(cfg.seed) : ""),
          scope_(cfg.experiment ? cfg.experiment->scope : ConfinementScope::AllStages),
          world_rng_(Rng(cfg.seed).split("world")),
          user_rng_(Rng(cfg.seed).split("users")),
          content_rng_(Rng(cfg.seed).split("content")),
          loop_rng_(Rng(cfg.seed).split("loop")) {
        arm_weights_.reserve(arms_.size());
        for (const auto& a : arms_) arm_weights_.push_back(a.weight);
        genre_indices_.resize(arms_.size());
        tau_.resize(arms_.size());
        for (size_t a = 0; a < arms_.size(); ++a) tau_[a] = arms_[a].lifecycle.maturity_tau;
        build_world();
        build_users();
    }

    SimResult run() {
        SimResult result;
        result.scenario = cfg_;
        result.design = design_;
        for (const auto& a : arms_) result.arm_labels.push_back(a.label);
        result.exposure.resize(arms_.size());
        for (size_t a = 0; a < arms_.size(); ++a) result.exposure[a].arm = arms_[a].label;

        const Tick total = cfg_.total_ticks();
        const double per_tick = cfg_.contents_per_day / static_cast<double>(kTicksPerDay);
        double creation_accum = 0.0;

        for (Tick now = 0; now < total; ++now) {
            creation_accum += per_tick;
            while (creation_accum >= 1.0) {
                creation_accum -= 1.0;
                create_content(now);
            }
            if (now % kTicksPerDay == 0) recalibrate_tau();
            step_lifecycle(now);
            rebuild_pools(now);
            run_fetches(now, result);
        }

        result.contents = std::move(contents_);
        result.users = std::move(users_);
        result.events = std::move(events_);
        return result;
    }

private:
    void build_world() {
        const size_t dim = static_cast<size_t>(cfg_.embedding.dim);
        genre_dirs_.reserve(cfg_.genres.size());
        for (size_t g = 0; g < cfg_.genres.size(); ++g) {
            Vec d(dim);
            for (double& x : d) x = world_rng_.normal();
            genre_dirs_.push_back(normalized(std::move(d)));
        }
        const size_t fdim = static_cast<size_t>(cfg_.generator.feature_dim);
        feature_map_.assign(fdim, Vec(dim));
        const double sd = 1.0 / std::sqrt(static_cast<double>(dim));
        for (auto& row : feature_map_)
            for (double& x : row) x = world_rng_.normal(0.0, sd);
    }

    int16_t user_arm(uint32_t id) const {
        if (design_ == Design::FullRollout && arms_.size() == 1) return 0;
        return static_cast<int16_t>(
            assign_arm(id, salt_ + ":user", arm_weights_));
    }

    void build_users() {
        users_.reserve(static_cast<size_t>(cfg_.users));
        for (uint32_t i = 0; i < static_cast<uint32_t>(cfg_.users); ++i) {
            UserProfile u;
            u.id = i;
            const uint16_t g = sample_genre(user_rng_);
            Vec e = genre_dirs_[g];
            // noise scaled so its expected norm is user_noise relative to the
            // unit genre direction, independent of the embedding dimension
            const double nsd = cfg_.generator.user_noise / std::sqrt(static_cast<double>(e.size()));
            for (double& x : e) x += user_rng_.normal(0.0, nsd);
            u.embedding = normalized(std::move(e));
            u.activity_rate = cfg_.generator.activity_rate_mean * user_rng_.uniform(0.5, 1.5);
            u.arm = user_arm(i);
            users_.push_back(std::move(u));
        }
    }

    uint16_t sample_genre(Rng& rng) {
        const double u = rng.uniform();
        double cum = 0.0;
        for (size_t g = 0; g < cfg_.genres.size(); ++g) {
            cum += cfg_.genres[g].prior;
            if (u < cum) return static_cast<uint16_t>(g);
        }
        return static_cast<uint16_t>(cfg_.genres.size() - 1);
    }

    void assign_content_arms(ContentState& c) {
        switch (design_) {
            case Design::FullRollout:
            case Design::UserLevel:
                c.stage_arm = {0, 0, 0};
                break;
            case Design::UserContent: {
                auto a = static_cast<int16_t>(
                    assign_arm(c.id, salt_ + ":content", arm_weights_));
                c.stage_arm = {a, a, a};
                break;
            }
            case Design::ParallelLifecycle:
                for (int s = 0; s < 3; ++s)
                    c.stage_arm[static_cast<size_t>(s)] = static_cast<int16_t>(assign_arm(
                        c.id,
                        salt_ + ":content:" + to_string(static_cast<Stage>(s)),
                        arm_weights_));
                break;
        }
    }

    // content-scoped knobs follow the content's arm for its current stage
    const ResolvedArm& content_cfg(const ContentState& c) const {
        int16_t a = c.arm_for(c.stage == Stage::Expired ? Stage::Mature : c.stage);
        return arms_[a < 0 ? 0 : static_cast<size_t>(a)];
    }

    void create_content(Tick now) {
        ContentState c;
        c.id = static_cast<uint32_t>(contents_.size());
        c.genre = sample_genre(content_rng_);
        c.created_at = now;
        c.duration_s = content_rng_.uniform(cfg_.generator.duration_min_s,
                                            cfg_.generator.duration_max_s);
        Vec e = genre_dirs_[c.genre];
        const double nsd = cfg_.generator.content_noise / std::sqrt(static_cast<double>(e.size()));
        for (double& x : e) x += content_rng_.normal(0.0, nsd);
        c.true_embedding = normalized(std::move(e));
        c.features.values.resize(feature_map_.size());
        for (size_t i = 0; i < feature_map_.size(); ++i)
            c.features.values[i] = dot(feature_map_[i], c.true_embedding) +
                                   cfg_.generator.feature_noise * content_rng_.normal();
        assign_content_arms(c);

        const ResolvedArm& arm = arms_[std::max<int16_t>(c.arm_for(Stage::Early), 0)];
        switch (arm.init_strategy) {
            case InitStrategy::Random:
                c.est_embedding = init_random(content_rng_, arm.embedding);
                break;
            case InitStrategy::GenreAverage:
                c.est_embedding = init_genre_average(
                    c.genre, genre_indices_[std::max<int16_t>(c.arm_for(Stage::Early), 0)],
                    content_rng_, arm.embedding);
                break;
            case InitStrategy::ModelBased:
                c.est_embedding =
                    init_model_based(c.features, c.true_embedding, content_rng_, arm.embedding);
                break;
        }
        c.throttled = arm.serving.throttle_fraction > 0.0 &&
                      content_rng_.bernoulli(arm.serving.throttle_fraction);
        contents_.push_back(std::move(c));
    }

    void recalibrate_tau() {
        if (!cfg_.tau_population_mean) return;
        // population-mean threshold: average maturity distance across live
        // Growth-stage posts, per arm
        std::vector<double> sum(arms_.size(), 0.0);
        std::vector<uint64_t> n(arms_.size(), 0);
        for (const auto& c : contents_) {
            if (c.stage != Stage::Growth) continue;
            size_t a = static_cast<size_t>(std::max<int16_t>(c.arm_for(Stage::Growth), 0));
            sum[a] += cosine_distance(c.est_embedding, c.true_embedding);
            ++n[a];
        }
        for (size_t a = 0; a < arms_.size(); ++a)
            if (n[a] > 0) tau_[a] = sum[a] / static_cast<double>(n[a]);
    }

    void step_lifecycle(Tick now) {
        for (auto& c : contents_) {
            if (c.stage == Stage::Expired) continue;
            const ResolvedArm& arm = content_cfg(c);
            LifecycleConfig lc = arm.lifecycle;
            lc.maturity_tau = tau_[std::max<int16_t>(c.arm_for(c.stage), 0)];
            c.stage = lifecycle_transition(c, now, lc);
        }
    }

    void rebuild_pools(Tick now) {
        early_pool_.assign(arms_.size(), {});
        ranked_pool_.assign(arms_.size(), {});
        for (const auto& c : contents_) {
            if (c.stage == Stage::Expired) continue;
            if (c.stage == Stage::Early) {
                // early content competes organically in the ranked pool too;
                // pledged pacing only tops it up via the fresh slots
                for (size_t ua = 0; ua < arms_.size(); ++ua) {
                    if (!route_visibility(design_, static_cast<int16_t>(ua), c, Stage::Early,
                                          scope_))
                        continue;
                    if (fresh_priority(c, now, content_cfg(c).serving) > 0.0)
                        early_pool_[ua].push_back(c.id);
                    ranked_pool_[ua].push_back(c.id);
                }
            } else {
                for (size_t ua = 0; ua < arms_.size(); ++ua)
                    if (route_visibility(design_, static_cast<int16_t>(ua), c, c.stage, scope_))
                        ranked_pool_[ua].push_back(c.id);
            }
        }
        // pre-sort fresh candidates once per tick; build_feed re-ranks the slice
        for (size_t ua = 0; ua < arms_.size(); ++ua) {
            auto& pool = early_pool_[ua];
            std::sort(pool.begin(), pool.end(), [&](uint32_t a, uint32_t b) {
                double pa = fresh_priority(contents_[a], now, content_cfg(contents_[a]).serving);
                double pb = fresh_priority(contents_[b], now, content_cfg(contents_[b]).serving);
                return pa != pb ? pa > pb : a < b;
            });
        }
    }

    Surface sample_surface(const ResolvedArm& arm, Rng& rng) {
        const double u = rng.uniform();
        double cum = 0.0;
        for (int s = 0; s < kNumSurfaces; ++s) {
            cum += arm.serving.surface_mix[static_cast<size_t>(s)];
            if (u < cum) return static_cast<Surface>(s);
        }
        return Surface::Scroll;
    }

    void run_fetches(Tick now, SimResult& result) {
        const int max_fresh =
            std::max({arms_[0].serving.fresh_slots[0], arms_[0].serving.fresh_slots[1],
                      arms_[0].serving.fresh_slots[2]});
        for (const auto& u : users_) {
            if (!loop_rng_.bernoulli(u.activity_rate)) continue;
            const size_t ua = static_cast<size_t>(std::max<int16_t>(u.arm, 0));
            const ResolvedArm& arm = arms_[ua];
            const Surface surface = sample_surface(arm, loop_rng_);
            ++result.exposure[ua].fetches;

            // fresh candidates: top slice of the per-tick priority order
            const auto& early = early_pool_[ua];
            const size_t fresh_take = std::min<size_t>(
                early.size(),
                static_cast<size_t>(std::max(max_fresh,
                                             arm.serving.fresh_slots[static_cast<size_t>(surface)]) *
                                    4));
            std::span<const uint32_t> fresh_pool(early.data(), fresh_take);

            // ranked candidates: per-fetch subsample of the visible pool
            const auto& ranked = ranked_pool_[ua];
            std::span<const uint32_t> ranked_pool;
            const int want = arm.serving.candidate_sample;
            if (want > 0 && ranked.size() > static_cast<size_t>(want)) {
                candidate_buf_.clear();
                std::unordered_set<uint32_t> taken;
                while (candidate_buf_.size() < static_cast<size_t>(want)) {
                    uint32_t id = ranked[loop_rng_.uniform_int(ranked.size())];
                    if (taken.insert(id).second) candidate_buf_.push_back(id);
                }
                ranked_pool = candidate_buf_;
            } else {
                ranked_pool = ranked;
            }

            FeedPage page = build_feed(u, surface, fresh_pool, ranked_pool, contents_, now,
                                       loop_rng_, arm.serving);
            auto events = record_impression(page, u, contents_, cfg_.genres, now, loop_rng_,
                                            arm.serving, arm.behavior, arm.embedding);
            for (auto& ev : events) {
                ev.seq = seq_++;
                if (ev.played) {
                    auto& row = result.exposure[ua];
                    ++row.views;
                    ++row.views_by_stage[static_cast<size_t>(ev.stage)];
                    if (ev.fresh) ++row.fresh_views;
                    else ++row.ranked_views;

                    ContentState& c = contents_[ev.content_id];
                    const ResolvedArm& ccfg = content_cfg(c);
                    if (!c.in_genre_index && c.views >= ccfg.embedding.high_view_threshold) {
                        c.in_genre_index = true;
                        genre_update(
                            genre_indices_[std::max<int16_t>(c.arm_for(Stage::Early), 0)], c);
                    }
                }
                events_.push_back(std::move(ev));
            }
        }
    }

    const ScenarioConfig& cfg_;
    std::vector<ResolvedArm> arms_;
    Design design_;
    std::string salt_;
    ConfinementScope scope_;
    Rng world_rng_, user_rng_, content_rng_, loop_rng_;
    std::vector<double> arm_weights_;
    std::vector<Vec> genre_dirs_;
    std::vector<Vec> feature_map_;
    std::vector<UserProfile> users_;
    std::vector<ContentState> contents_;
    std::vector<GenreIndex> genre_indices_;
    std::vector<double> tau_;  // per arm, possibly recalibrated
    std::vector<std::vector<uint32_t>> early_pool_;   // keyed by user arm
    std::vector<std::vector<uint32_t>> ranked_pool_;  // keyed by user arm
    std::vector<uint32_t> candidate_buf_;
    std::vector<ImpressionEvent> events_;
    uint64_t seq_ = 0;
};

}  // namespace

SimResult run_simulation(const ScenarioConfig& cfg) { return Engine(cfg).run(); }

ViewLedger ledger_from_contents(std::span<const ContentState> contents,
                                std::span<const GenreSpec> genres) {
    ViewLedger ledger;
    ledger.entries.reserve(contents.size());
    for (const auto& c : contents) {
        LedgerEntry e;
        e.content_id = c.id;
        e.genre = genres[c.genre].name;
        e.created_at = c.created_at;
        e.view_series = c.view_series;
        e.min_views_met_at = c.min_views_met_at;
        ledger.entries.push_back(std::move(e));
    }
    return ledger;
}

ViewLedger arm_ledger_from_events(const SimResult& result, int16_t arm, uint64_t views_min) {
    StreamingStats stats;
    for (const auto& c : result.contents)
        stats.register_content(c.id, result.scenario.genres[c.genre].name, c.created_at,
                               views_min);
    for (const auto& ev : result.events)
        if (ev.arm == arm) stats.add(ev);
    ViewLedger full = stats.ledger();
    ViewLedger out;
    for (auto& e : full.entries)
        if (!e.view_series.empty()) out.entries.push_back(std::move(e));
    return out;
}

MetricReport compute_report(const ViewLedger& ledger, std::span<const ImpressionEvent> events,
                            const MetricsConfig& metrics, uint64_t views_min,
                            std::string arm_label, std::optional<uint64_t> fetches) {
    MetricReport r;
    r.arm = std::move(arm_label);
    r.views_min = views_min;
    for (int64_t x : metrics.cvp_thresholds)
        r.cvp_curve.emplace_back(x, cvp(ledger, x, static_cast<int64_t>(views_min)));
    for (const auto& s : metrics.csr_specs)
        r.csr_curve.push_back(
            {s.y, s.x, s.t, s.t_prime, csr(ledger, s.y, s.x, s.t, s.t_prime)});
    auto sat = satisfaction_rates(events);
    r.engagement_per_view = sat.engagement_per_view;
    r.successful_play_rate = sat.successful_play_rate;
    if (fetches && *fetches > 0) {
        uint64_t engagements = 0;
        for (const auto& ev : events)
            if (ev.engaged) ++engagements;
        r.engagement_per_fetch =
            static_cast<double>(engagements) / static_cast<double>(*fetches);
    }

    std::vector<std::string> genre_names;
    for (const auto& e : ledger.entries)
        if (std::find(genre_names.begin(), genre_names.end(), e.genre) == genre_names.end())
            genre_names.push_back(e.genre);
    std::sort(genre_names.begin(), genre_names.end());
    for (const auto& g : genre_names)
        r.genre_latency.push_back(
            {g, cvp_by_latency_bucket(ledger, g, metrics.latency_cvp_x,
                                      metrics.latency_bucket_edges)});
    return r;
}

MetricReport report_from_result(const SimResult& result) {
    ViewLedger ledger = ledger_from_contents(result.contents, result.scenario.genres);
    return compute_report(ledger, result.events, result.scenario.metrics,
                          result.scenario.serving.views_min, "all",
                          delivered_fetches(result.events));
}

}  // namespace fcsim
