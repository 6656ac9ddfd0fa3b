#include "fcsim/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "fcsim/behavior.hpp"
#include "fcsim/rng.hpp"
#include "fcsim/scenario.hpp"
#include "fcsim/simulation.hpp"

namespace fcsim {

int assign_arm(uint64_t entity_id, std::string_view salt, std::span<const double> weights) {
    const uint64_t h = Rng::mix(Rng::hash_str(salt), entity_id);
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    double cum = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
        cum += weights[i];
        if (u < cum) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
}

bool route_visibility(Design design, int16_t user_arm, const ContentState& c, Stage stage,
                      ConfinementScope scope) {
    switch (design) {
        case Design::FullRollout:
        case Design::UserLevel:
            return true;  // shared corpus
        case Design::UserContent: {
            if (user_arm == kNoArm || c.arm_for(Stage::Early) == kNoArm)
                throw std::invalid_argument(
                    "route_visibility: user_content design requires arm labels");
            if (scope == ConfinementScope::EarlyOnly && stage != Stage::Early) return true;
            return user_arm == c.arm_for(Stage::Early);
        }
        case Design::ParallelLifecycle: {
            if (stage == Stage::Expired) return false;
            const int16_t stage_arm = c.arm_for(stage);
            if (user_arm == kNoArm || stage_arm == kNoArm)
                throw std::invalid_argument(
                    "route_visibility: parallel design requires stage arm labels");
            return user_arm == stage_arm;
        }
    }
    return false;
}

namespace {

// Element-wise aggregation of replicate reports into mean and stddev.
void aggregate_optional(std::vector<std::optional<double>> vals, std::optional<double>& mean,
                        std::optional<double>& stddev) {
    double sum = 0.0, sum2 = 0.0;
    size_t n = 0;
    for (const auto& v : vals) {
        if (!v) continue;
        sum += *v;
        sum2 += *v * *v;
        ++n;
    }
    if (n == 0) {
        mean = std::nullopt;
        stddev = std::nullopt;
        return;
    }
    const double m = sum / static_cast<double>(n);
    mean = m;
    stddev = n > 1 ? std::sqrt(std::max(0.0, (sum2 - static_cast<double>(n) * m * m) /
                                                 static_cast<double>(n - 1)))
                   : 0.0;
}

void aggregate_reports(const std::vector<MetricReport>& reps, MetricReport& mean,
                       MetricReport& stddev) {
    mean = reps.front();
    stddev = reps.front();
    auto collect = [&](auto getter, std::optional<double>& m, std::optional<double>& s) {
        std::vector<std::optional<double>> vals;
        for (const auto& r : reps) vals.push_back(getter(r));
        aggregate_optional(std::move(vals), m, s);
    };

    for (size_t i = 0; i < mean.cvp_curve.size(); ++i)
        collect([&](const MetricReport& r) { return r.cvp_curve[i].second; },
                mean.cvp_curve[i].second, stddev.cvp_curve[i].second);
    for (size_t i = 0; i < mean.csr_curve.size(); ++i)
        collect([&](const MetricReport& r) { return r.csr_curve[i].value; },
                mean.csr_curve[i].value, stddev.csr_curve[i].value);
    collect([](const MetricReport& r) { return r.engagement_per_view; },
            mean.engagement_per_view, stddev.engagement_per_view);
    collect([](const MetricReport& r) { return r.successful_play_rate; },
            mean.successful_play_rate, stddev.successful_play_rate);
    collect([](const MetricReport& r) { return r.engagement_per_fetch; },
            mean.engagement_per_fetch, stddev.engagement_per_fetch);
    for (size_t g = 0; g < mean.genre_latency.size(); ++g) {
        for (size_t b = 0; b < mean.genre_latency[g].buckets.size(); ++b) {
            collect(
                [&](const MetricReport& r) {
                    // genre sets can differ across replicates; match by name
                    for (const auto& gl : r.genre_latency)
                        if (gl.genre == mean.genre_latency[g].genre &&
                            b < gl.buckets.size())
                            return gl.buckets[b].value;
                    return std::optional<double>{};
                },
                mean.genre_latency[g].buckets[b].value,
                stddev.genre_latency[g].buckets[b].value);
        }
    }
}

}  // namespace

std::vector<ArmReport> run_experiment(const ExperimentPlan& plan, const ScenarioConfig& base) {
    ScenarioConfig cfg = base;
    cfg.experiment = plan;
    // resolve once so bad overrides fail before any simulation runs
    const std::vector<ResolvedArm> resolved = resolve_arms(cfg);

    std::vector<ArmReport> reports(plan.arms.size());
    for (size_t a = 0; a < plan.arms.size(); ++a) {
        reports[a].label = plan.arms[a].label;
        reports[a].exposure.arm = plan.arms[a].label;
    }

    for (uint64_t seed : plan.replicate_seeds) {
        ScenarioConfig rep_cfg = cfg;
        rep_cfg.seed = seed;
        SimResult result = run_simulation(rep_cfg);

        for (size_t a = 0; a < plan.arms.size(); ++a) {
            const auto arm = static_cast<int16_t>(a);
            const uint64_t views_min = resolved[a].serving.views_min;
            // Measurement follows the design. A user-level split shares the
            // corpus, so an arm can only claim the views its own users
            // delivered. Designs that confine content to an arm report each
            // content's full view series under the arm that owned its early
            // phase.
            ViewLedger ledger;
            std::vector<ImpressionEvent> arm_events;
            if (plan.design == Design::UserLevel) {
                ledger = arm_ledger_from_events(result, arm, views_min);
                for (const auto& ev : result.events)
                    if (ev.arm == arm) arm_events.push_back(ev);
            } else {
                ViewLedger full = ledger_from_contents(result.contents, rep_cfg.genres);
                for (auto& e : full.entries)
                    if (result.contents[e.content_id].arm_for(Stage::Early) == arm)
                        ledger.entries.push_back(std::move(e));
                for (const auto& ev : result.events)
                    if (result.contents[ev.content_id].arm_for(Stage::Early) == arm)
                        arm_events.push_back(ev);
            }
            MetricReport rep =
                compute_report(ledger, arm_events, rep_cfg.metrics, views_min,
                               plan.arms[a].label, delivered_fetches(arm_events));
            reports[a].replicates.push_back(std::move(rep));

            auto& exp = reports[a].exposure;
            const auto& row = result.exposure[a];
            exp.views += row.views;
            exp.fresh_views += row.fresh_views;
            exp.ranked_views += row.ranked_views;
            exp.fetches += row.fetches;
            for (size_t s = 0; s < kNumStages; ++s) exp.views_by_stage[s] += row.views_by_stage[s];
        }
    }

    for (auto& r : reports) aggregate_reports(r.replicates, r.mean, r.stddev);
    return reports;
}

namespace {

void push_rows(std::vector<BiasRow>& rows, const std::string& name,
               std::optional<double> exp_a, std::optional<double> exp_b,
               std::optional<double> tru_a, std::optional<double> tru_b) {
    BiasRow row;
    row.metric = name;
    if (!exp_a || !exp_b || !tru_a || !tru_b) {
        row.defined = false;
        rows.push_back(std::move(row));
        return;
    }
    row.experiment_delta = *exp_b - *exp_a;
    row.truth_delta = *tru_b - *tru_a;
    row.bias = std::abs(row.experiment_delta - row.truth_delta);
    rows.push_back(std::move(row));
}

}  // namespace

std::vector<BiasRow> estimate_bias(const std::vector<ArmReport>& experiment_arms,
                                   const ArmReport& truth_a, const ArmReport& truth_b) {
    if (experiment_arms.size() != 2)
        throw std::invalid_argument("estimate_bias: expected exactly two experiment arms");
    const MetricReport& ea = experiment_arms[0].mean;
    const MetricReport& eb = experiment_arms[1].mean;
    const MetricReport& ta = truth_a.mean;
    const MetricReport& tb = truth_b.mean;

    std::vector<BiasRow> rows;
    for (size_t i = 0; i < ea.cvp_curve.size(); ++i)
        push_rows(rows, "cvp@" + std::to_string(ea.cvp_curve[i].first),
                  ea.cvp_curve[i].second, eb.cvp_curve[i].second, ta.cvp_curve[i].second,
                  tb.cvp_curve[i].second);
    for (size_t i = 0; i < ea.csr_curve.size(); ++i)
        push_rows(rows,
                  "csr@y" + std::to_string(ea.csr_curve[i].y) + "_x" +
                      std::to_string(ea.csr_curve[i].x),
                  ea.csr_curve[i].value, eb.csr_curve[i].value, ta.csr_curve[i].value,
                  tb.csr_curve[i].value);
    push_rows(rows, "engagement_per_view", ea.engagement_per_view, eb.engagement_per_view,
              ta.engagement_per_view, tb.engagement_per_view);
    push_rows(rows, "successful_play_rate", ea.successful_play_rate, eb.successful_play_rate,
              ta.successful_play_rate, tb.successful_play_rate);
    return rows;
}

std::vector<BiasRow> run_bias_analysis(const ExperimentPlan& plan, const ScenarioConfig& base,
                                       std::vector<ArmReport>* out_experiment,
                                       std::vector<ArmReport>* out_truth) {
    if (plan.arms.size() != 2)
        throw std::invalid_argument("run_bias_analysis: expected exactly two arms");

    std::vector<ArmReport> experiment_arms = run_experiment(plan, base);

    std::vector<ArmReport> truth;
    for (const auto& arm : plan.arms) {
        ExperimentPlan rollout;
        rollout.design = Design::FullRollout;
        rollout.salt = plan.salt;
        rollout.replicate_seeds = plan.replicate_seeds;
        rollout.arms = {ArmSpec{arm.label, 1.0, arm.overrides}};
        truth.push_back(run_experiment(rollout, base).front());
    }

    auto rows = estimate_bias(experiment_arms, truth[0], truth[1]);
    if (out_experiment) *out_experiment = std::move(experiment_arms);
    if (out_truth) *out_truth = std::move(truth);
    return rows;
}

OfflineReport run_offline_eval(const ScenarioConfig& cfg, uint64_t seed, size_t n_impressions) {
    Rng rng = Rng(seed).split("offline");
    const size_t dim = static_cast<size_t>(cfg.embedding.dim);

    std::vector<Vec> genre_dirs;
    for (size_t g = 0; g < cfg.genres.size(); ++g) {
        Vec d(dim);
        for (double& x : d) x = rng.normal();
        genre_dirs.push_back(normalized(std::move(d)));
    }
    auto sample_genre = [&]() -> uint16_t {
        const double u = rng.uniform();
        double cum = 0.0;
        for (size_t g = 0; g < cfg.genres.size(); ++g) {
            cum += cfg.genres[g].prior;
            if (u < cum) return static_cast<uint16_t>(g);
        }
        return static_cast<uint16_t>(cfg.genres.size() - 1);
    };
    // noise scaled so its expected norm matches the knob regardless of dim
    const double root_dim = std::sqrt(static_cast<double>(dim));
    auto make_true = [&](uint16_t g) {
        Vec e = genre_dirs[g];
        for (double& x : e) x += rng.normal(0.0, cfg.generator.content_noise / root_dim);
        return normalized(std::move(e));
    };

    // historical high-view posts seed the genre index with converged embeddings
    GenreIndex index;
    uint32_t next_id = 0;
    for (uint16_t g = 0; g < cfg.genres.size(); ++g)
        for (int i = 0; i < 50; ++i) index.add(g, next_id++, make_true(g));

    const size_t n_items = 500, n_users = 500;
    std::vector<Vec> est_random(n_items), est_genre(n_items), est_model(n_items);
    std::vector<Vec> item_true(n_items);
    std::vector<std::vector<size_t>> items_by_genre(cfg.genres.size());
    for (size_t i = 0; i < n_items; ++i) {
        const uint16_t g = sample_genre();
        item_true[i] = make_true(g);
        items_by_genre[g].push_back(i);
        ContentFeatures feats;  // not used by the stand-in but part of the contract
        est_random[i] = init_random(rng, cfg.embedding);
        est_genre[i] = init_genre_average(g, index, rng, cfg.embedding);
        est_model[i] = init_model_based(feats, item_true[i], rng, cfg.embedding);
    }
    std::vector<Vec> user_emb(n_users);
    std::vector<uint16_t> user_genre(n_users);
    for (size_t u = 0; u < n_users; ++u) {
        user_genre[u] = sample_genre();
        Vec e = genre_dirs[user_genre[u]];
        for (double& x : e) x += rng.normal(0.0, cfg.generator.user_noise / root_dim);
        user_emb[u] = normalized(std::move(e));
    }

    std::vector<std::pair<double, int>> srandom, sgenre, smodel;
    srandom.reserve(n_impressions);
    sgenre.reserve(n_impressions);
    smodel.reserve(n_impressions);
    const double duration = 30.0;
    // impressions follow a feed-like distribution: mostly items from the
    // user's own genre, the rest exploratory
    const double same_genre_rate = 0.7;
    for (size_t k = 0; k < n_impressions; ++k) {
        const size_t u = rng.uniform_int(n_users);
        const auto& own = items_by_genre[user_genre[u]];
        const size_t i = (!own.empty() && rng.bernoulli(same_genre_rate))
                             ? own[rng.uniform_int(own.size())]
                             : rng.uniform_int(n_items);
        const double aff = cosine_similarity(user_emb[u], item_true[i]);
        const double watch = sample_watch(rng, aff, 1.0, duration, cfg.behavior);
        const int label = classify_watch(watch, duration) == WatchOutcome::Successful ? 1 : 0;
        srandom.emplace_back(cosine_similarity(user_emb[u], est_random[i]), label);
        sgenre.emplace_back(cosine_similarity(user_emb[u], est_genre[i]), label);
        smodel.emplace_back(cosine_similarity(user_emb[u], est_model[i]), label);
    }

    OfflineReport report;
    report.baseline_algo = "genre_average";
    const auto auc_genre = auc(sgenre);
    auto eval = [&](const std::string& name,
                    const std::vector<std::pair<double, int>>& s) {
        OfflineAlgoMetrics m;
        m.algo = name;
        m.auc = auc(s);
        m.f1 = f1_from_scores(s, cfg.metrics.f1_threshold);
        if (m.auc && auc_genre) m.rela_impr = rela_impr(*m.auc, *auc_genre);
        return m;
    };
    report.algos.push_back(eval("random", srandom));
    report.algos.push_back(eval("genre_average", sgenre));
    report.algos.push_back(eval("model_based", smodel));
    return report;
}

}  // namespace fcsim
