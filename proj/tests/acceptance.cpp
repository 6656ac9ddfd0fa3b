// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Trend criteria run on scaled-down scenarios sized for CI; the
// tolerances below are pinned, not tuned per run.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fcsim/behavior.hpp"
#include "fcsim/embeddings.hpp"
#include "fcsim/event_log.hpp"
#include "fcsim/experiments.hpp"
#include "fcsim/metrics.hpp"
#include "fcsim/simulation.hpp"

using namespace fcsim;

namespace {

struct Criterion {
    int id;
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : "n/a"; }

// ---------------------------------------------------------------- criterion 1

struct NaiveLog {
    struct Row {
        Tick tick;
        uint32_t content;
        bool played, engaged;
        WatchOutcome outcome;
    };
    std::vector<Row> rows;

    // full recomputation from scratch, no incremental state
    void recompute(const std::vector<uint32_t>& ids, const std::vector<Tick>& created,
                   uint64_t views_min, ViewLedger& ledger, SatisfactionRates& sat) const {
        ledger.entries.clear();
        std::map<uint32_t, size_t> index;
        for (size_t i = 0; i < ids.size(); ++i) {
            LedgerEntry e;
            e.content_id = ids[i];
            e.created_at = created[i];
            index[ids[i]] = ledger.entries.size();
            ledger.entries.push_back(std::move(e));
        }
        uint64_t plays = 0, successes = 0, engagements = 0;
        for (const auto& r : rows) {
            if (!r.played) continue;
            ++plays;
            if (r.outcome == WatchOutcome::Successful) ++successes;
            if (r.engaged) ++engagements;
            auto& e = ledger.entries[index.at(r.content)];
            if (!e.view_series.empty() && e.view_series.back().first == r.tick)
                ++e.view_series.back().second;
            else
                e.view_series.emplace_back(r.tick, e.final_views() + 1);
            if (!e.min_views_met_at && e.final_views() >= views_min)
                e.min_views_met_at = r.tick;
        }
        sat.engagement_per_view.reset();
        sat.successful_play_rate.reset();
        if (plays > 0) {
            sat.engagement_per_view = static_cast<double>(engagements) / plays;
            sat.successful_play_rate = static_cast<double>(successes) / plays;
        }
    }
};

Criterion criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const int trials = 1'000;
    const size_t n_events = 10'000;
    const uint64_t views_min = 40;
    int mismatches = 0;

    Rng rng(0xACCE5501);
    for (int trial = 0; trial < trials; ++trial) {
        const size_t n_contents = 100 + rng.uniform_int(100);
        std::vector<uint32_t> ids(n_contents);
        std::vector<Tick> created(n_contents);
        StreamingStats stats;
        for (size_t i = 0; i < n_contents; ++i) {
            ids[i] = static_cast<uint32_t>(i);
            created[i] = static_cast<Tick>(rng.uniform_int(200));
            stats.register_content(ids[i], "g", created[i], views_min);
        }

        NaiveLog naive;
        Tick tick = 0;
        for (size_t i = 0; i < n_events; ++i) {
            if (rng.bernoulli(0.05)) ++tick;
            ImpressionEvent ev;
            ev.tick = tick;
            ev.seq = i;
            ev.content_id = ids[rng.uniform_int(n_contents)];
            ev.played = rng.bernoulli(0.7);
            if (ev.played) {
                const int o = static_cast<int>(rng.uniform_int(3));
                ev.outcome = static_cast<WatchOutcome>(o);
                ev.engaged =
                    *ev.outcome == WatchOutcome::Successful && rng.bernoulli(0.2);
            }
            stats.add(ev);
            naive.rows.push_back(
                {ev.tick, ev.content_id, ev.played, ev.engaged,
                 ev.outcome.value_or(WatchOutcome::Skip)});
        }

        ViewLedger expect;
        SatisfactionRates expect_sat;
        naive.recompute(ids, created, views_min, expect, expect_sat);
        const ViewLedger got = stats.ledger();
        const SatisfactionRates got_sat = stats.satisfaction();

        bool ok = got.entries.size() == expect.entries.size();
        for (size_t i = 0; ok && i < got.entries.size(); ++i)
            ok = got.entries[i].view_series == expect.entries[i].view_series &&
                 got.entries[i].min_views_met_at == expect.entries[i].min_views_met_at;
        ok = ok && got_sat.engagement_per_view == expect_sat.engagement_per_view &&
             got_sat.successful_play_rate == expect_sat.successful_play_rate;
        // the derived metrics must agree exactly as well
        for (int64_t x : {10, 40, 100, 300})
            ok = ok && cvp(got, x, static_cast<int64_t>(views_min)) ==
                           cvp(expect, x, static_cast<int64_t>(views_min));
        ok = ok && csr(got, 40, 10, 100, 100) == csr(expect, 40, 10, 100, 100);
        if (!ok) ++mismatches;
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Criterion c{1, false, ""};
    c.pass = mismatches == 0 && secs < 60.0;
    c.detail = std::to_string(trials) + " logs x " + std::to_string(n_events) +
               " events, mismatches=" + std::to_string(mismatches) + ", " + fmt(secs) + "s";
    return c;
}

// ---------------------------------------------------------------- criterion 2

Criterion criterion_2() {
    Rng rng(0xACCE5502);
    const int cases = 10'000;
    int violations = 0;
    for (int t = 0; t < cases; ++t) {
        ViewLedger ledger;
        const size_t n = 5 + rng.uniform_int(25);
        for (size_t i = 0; i < n; ++i) {
            LedgerEntry e;
            e.content_id = static_cast<uint32_t>(i);
            uint64_t cum = 0;
            Tick tick = static_cast<Tick>(rng.uniform_int(20));
            const size_t steps = rng.uniform_int(15);
            for (size_t s = 0; s < steps; ++s) {
                cum += 1 + rng.uniform_int(50);
                e.view_series.emplace_back(tick, cum);
                tick += 1 + static_cast<Tick>(rng.uniform_int(30));
            }
            ledger.entries.push_back(std::move(e));
        }

        const int64_t y = static_cast<int64_t>(rng.uniform_int(200));
        // cvp(x|y) = 1 for x <= y
        const int64_t x_low = y > 0 ? static_cast<int64_t>(rng.uniform_int(
                                          static_cast<uint64_t>(y) + 1))
                                    : 0;
        auto unit = cvp(ledger, x_low, y);
        if (unit && *unit != 1.0) ++violations;
        // non-increasing in x
        std::optional<double> prev;
        for (int64_t x : {0, 20, 60, 150, 400, 900}) {
            auto v = cvp(ledger, x, y);
            if (prev && v && *v > *prev + 1e-12) ++violations;
            if (v) prev = v;
        }
        // CSR non-decreasing in t', non-increasing in x
        const Tick t0 = static_cast<Tick>(rng.uniform_int(120));
        std::optional<double> prev_csr;
        for (Tick tp : {0, 30, 90, 250}) {
            auto v = csr(ledger, 30, 25, t0, tp);
            if (prev_csr && v && *v < *prev_csr - 1e-12) ++violations;
            if (v) prev_csr = v;
        }
        std::optional<double> prev_x;
        for (int64_t x : {1, 10, 40, 160}) {
            auto v = csr(ledger, 30, x, t0, 60);
            if (prev_x && v && *v > *prev_x + 1e-12) ++violations;
            if (v) prev_x = v;
        }
    }
    Criterion c{2, false, ""};
    c.pass = violations == 0;
    c.detail = std::to_string(cases) + " random ledgers, violations=" +
               std::to_string(violations);
    return c;
}

// ------------------------------------------------- shared scaled scenario

ScenarioConfig scaled_base(uint64_t seed) {
    ScenarioConfig cfg = default_scenario();
    cfg.seed = seed;
    cfg.users = 1'000;
    cfg.contents_per_day = 60.0;
    cfg.days = 6;
    cfg.serving.views_min = 60;
    cfg.lifecycle.views_min = 60;
    cfg.metrics.cvp_thresholds = {100, 150, 300};
    cfg.metrics.csr_specs = {{60, 20, 2 * kTicksPerDay, 2 * kTicksPerDay}};
    cfg.metrics.latency_cvp_x = 120;
    return cfg;
}

// ---------------------------------------------------------------- criterion 3

Criterion criterion_3() {
    // thresholds scaled from {500, 1k, 5k}; the 1.5x check uses the middle one
    const std::vector<int64_t> xs{120, 180, 360};
    const Tick window = 48 * kTicksPerHour;
    const int reps = 5;

    std::vector<double> met_sum(xs.size(), 0.0), not_sum(xs.size(), 0.0);
    int defined = 0;
    for (int rep = 0; rep < reps; ++rep) {
        ScenarioConfig cfg = scaled_base(7100 + static_cast<uint64_t>(rep));
        cfg.users = 700;  // saturate pacing so some budgets land past 48h
        cfg.contents_per_day = 200.0;
        cfg.serving.throttle_fraction = 0.4;
        cfg.serving.throttle_factor = 0.05;
        auto result = run_simulation(cfg);
        auto full = ledger_from_contents(result.contents, cfg.genres);

        ViewLedger met, not_met;
        const Tick horizon = cfg.total_ticks() - 2 * window;  // room to be judged
        for (auto& e : full.entries) {
            if (e.created_at > horizon) continue;
            const bool within =
                e.min_views_met_at && *e.min_views_met_at - e.created_at <= window;
            (within ? met : not_met).entries.push_back(e);
        }
        bool all_defined = true;
        std::vector<double> m(xs.size()), nm(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            auto a = cvp(met, xs[i], static_cast<int64_t>(cfg.serving.views_min));
            auto b = cvp(not_met, xs[i], static_cast<int64_t>(cfg.serving.views_min));
            if (!a || !b) { all_defined = false; break; }
            m[i] = *a;
            nm[i] = *b;
        }
        if (!all_defined) continue;
        ++defined;
        for (size_t i = 0; i < xs.size(); ++i) {
            met_sum[i] += m[i];
            not_sum[i] += nm[i];
        }
    }

    Criterion c{3, false, ""};
    if (defined < reps) {
        c.detail = "only " + std::to_string(defined) + "/" + std::to_string(reps) +
                   " replicates had both groups populated";
        return c;
    }
    std::vector<double> gap(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) gap[i] = (met_sum[i] - not_sum[i]) / reps;
    const double ratio = met_sum[1] / std::max(not_sum[1], 1e-12);
    const bool shrinks = gap[0] > gap[1] && gap[1] > gap[2];
    c.pass = ratio >= 1.5 && shrinks;
    c.detail = "CVP(" + std::to_string(xs[1]) + "|views_min) met/not-met ratio=" + fmt(ratio) +
               " (need >=1.5), gaps " + fmt(gap[0]) + " > " + fmt(gap[1]) + " > " +
               fmt(gap[2]) + (shrinks ? "" : " NOT monotone");
    return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion criterion_4() {
    // views_min sweep scaled from {100, 200, 500}; x scaled from 1k. The two
    // halves of the trend live in different load regimes at desk scale: the
    // CVP gain (and its saturation) needs pledges to complete comfortably,
    // while the survival gain comes from a larger pledge keeping content
    // actively served past the measurement point, which needs contention.
    const std::vector<uint64_t> vms{40, 80, 160};
    const int64_t x = 400;
    const int reps = 5;

    std::vector<double> cvp_mean(vms.size(), 0.0), csr_mean(vms.size(), 0.0);
    bool all_defined = true;
    for (int rep = 0; rep < reps; ++rep) {
        for (size_t i = 0; i < vms.size(); ++i) {
            ScenarioConfig cfg = scaled_base(7400 + static_cast<uint64_t>(rep));
            cfg.contents_per_day = 30.0;  // pledges complete well within target
            cfg.embedding.update_every_plays = 3;
            cfg.serving.views_min = vms[i];
            cfg.lifecycle.views_min = vms[i];
            auto result = run_simulation(cfg);
            auto ledger = ledger_from_contents(result.contents, cfg.genres);
            auto v = cvp(ledger, x, static_cast<int64_t>(vms[i]));
            if (!v) all_defined = false;
            cvp_mean[i] += v.value_or(0.0) / reps;

            ScenarioConfig heavy = cfg;
            heavy.contents_per_day = 130.0;  // larger pledges outlast the window
            auto hresult = run_simulation(heavy);
            auto hledger = ledger_from_contents(hresult.contents, heavy.genres);
            auto s = csr(hledger, 40, 60, 2 * kTicksPerDay, 2 * kTicksPerDay);
            if (!s) all_defined = false;
            csr_mean[i] += s.value_or(0.0) / reps;
        }
    }

    const bool cvp_up = cvp_mean[0] < cvp_mean[1] && cvp_mean[1] < cvp_mean[2];
    const bool csr_up = csr_mean[0] < csr_mean[1] && csr_mean[1] < csr_mean[2];
    const double gain_lo = cvp_mean[1] - cvp_mean[0];
    const double gain_hi = cvp_mean[2] - cvp_mean[1];
    Criterion c{4, false, ""};
    c.pass = all_defined && cvp_up && csr_up && gain_hi < gain_lo;
    c.detail = "CVP(" + std::to_string(x) + "|vm) = " + fmt(cvp_mean[0]) + ", " +
               fmt(cvp_mean[1]) + ", " + fmt(cvp_mean[2]) + " (gains " + fmt(gain_lo) +
               " -> " + fmt(gain_hi) + "); CSR = " + fmt(csr_mean[0]) + ", " +
               fmt(csr_mean[1]) + ", " + fmt(csr_mean[2]) +
               (all_defined ? "" : "; some values undefined");
    return c;
}

// ---------------------------------------------------------------- criterion 5

Criterion criterion_5() {
    const int reps = 5;
    ViewLedger pooled;
    Tick total = 0;
    std::vector<Tick> edges;
    int64_t x = 0;
    for (int rep = 0; rep < reps; ++rep) {
        ScenarioConfig cfg = scaled_base(7500 + static_cast<uint64_t>(rep));
        cfg.days = 8;
        cfg.users = 1000;
        cfg.contents_per_day = 100.0;
        // Gate half the inventory hard so budget latencies spread across
        // buckets, and lean on exploration for the post-budget catch-up;
        // exploration plays are gated by relevance everywhere except the
        // autoplay scroll surface, so keep that surface rare.
        cfg.serving.throttle_fraction = 0.5;
        cfg.serving.throttle_factor = 0.05;
        cfg.serving.epsilon = 0.35;
        cfg.serving.surface_mix = {0.55, 0.35, 0.10};
        cfg.metrics.latency_cvp_x = 85;
        cfg.genres = {{"news", 0.5, 6.0 * kTicksPerHour, 0.6},
                      {"evergreen", 0.5, std::numeric_limits<double>::infinity(), 0.6}};
        total = cfg.total_ticks();
        edges = cfg.metrics.latency_bucket_edges;
        x = cfg.metrics.latency_cvp_x;
        auto result = run_simulation(cfg);
        auto ledger = ledger_from_contents(result.contents, cfg.genres);
        // only contents old enough to land in any bucket and still grow
        const Tick cutoff = total - edges.back() - 24 * kTicksPerHour;
        for (auto& e : ledger.entries)
            if (e.created_at <= cutoff) pooled.entries.push_back(std::move(e));
    }

    auto news = cvp_by_latency_bucket(pooled, "news", x, edges);
    auto ever = cvp_by_latency_bucket(pooled, "evergreen", x, edges);

    Criterion c{5, false, ""};
    // Compare over populated buckets; an empty tail bucket carries no signal.
    std::vector<double> news_vals, ever_vals;
    for (const auto& b : news)
        if (b.value) news_vals.push_back(*b.value);
    for (const auto& b : ever)
        if (b.value) ever_vals.push_back(*b.value);
    if (news_vals.size() < 3 || ever_vals.size() < 3) {
        c.detail = "too few populated buckets (news " + std::to_string(news_vals.size()) +
                   ", evergreen " + std::to_string(ever_vals.size()) + ")";
        return c;
    }
    const double first = news_vals.front(), last = news_vals.back();
    const bool news_ok = first >= 1.25 * last;

    double sum = 0.0;
    for (double v : ever_vals) sum += v;
    const double mean = sum / static_cast<double>(ever_vals.size());
    double worst = 0.0;
    for (double v : ever_vals) worst = std::max(worst, std::abs(v - mean) / mean);
    const bool flat = worst <= 0.05;

    c.pass = news_ok && flat;
    c.detail = "news first/last = " + fmt(first) + "/" + fmt(last) + " (ratio " +
               fmt(first / last) + ", need >=1.25, " + std::to_string(news_vals.size()) +
               " buckets); evergreen max dev " + fmt(worst) + " (need <=0.05, " +
               std::to_string(ever_vals.size()) + " buckets)";
    return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion criterion_6() {
    auto report = run_offline_eval(default_scenario(), 2024, 10'000);
    std::optional<double> a_rand, a_genre, a_model, ri_model;
    for (const auto& a : report.algos) {
        if (a.algo == "random") a_rand = a.auc;
        if (a.algo == "genre_average") a_genre = a.auc;
        if (a.algo == "model_based") { a_model = a.auc; ri_model = a.rela_impr; }
    }
    Criterion c{6, false, ""};
    if (!a_rand || !a_genre || !a_model) {
        c.detail = "missing AUC values";
        return c;
    }
    c.pass = *a_model > *a_genre && *a_genre > *a_rand &&
             std::abs(*a_rand - 0.5) <= 0.02 && ri_model && *ri_model > 0.0 &&
             *a_genre > 0.5;
    c.detail = "AUC model=" + fmt(*a_model) + " > genre=" + fmt(*a_genre) +
               " > random=" + fmt(*a_rand) + ", RelaImpr(model)=" + fmt_opt(ri_model) + "%";
    return c;
}

// ---------------------------------------------------------------- criterion 7

std::optional<double> cvp_at(const MetricReport& r, int64_t x) {
    for (const auto& [t, v] : r.cvp_curve)
        if (t == x) return v;
    return std::nullopt;
}

Criterion criterion_7() {
    ScenarioConfig cfg = scaled_base(7700);
    ExperimentPlan plan;
    plan.design = Design::UserContent;
    plan.salt = "accept-7";
    plan.arms = {{"genre", 0.5, nlohmann::json{{"init_strategy", "genre_average"}}},
                 {"model", 0.5, nlohmann::json{{"init_strategy", "model_based"}}}};
    plan.replicate_seeds = {7701, 7702, 7703, 7704, 7705};
    auto arms = run_experiment(plan, cfg);

    const int64_t x = 150;  // scaled from CVP(500|views_min)
    int wins_cvp = 0, wins_eng = 0, wins_succ = 0;
    const size_t reps = arms[0].replicates.size();
    for (size_t r = 0; r < reps; ++r) {
        const auto& g = arms[0].replicates[r];
        const auto& m = arms[1].replicates[r];
        auto gc = cvp_at(g, x), mc = cvp_at(m, x);
        if (gc && mc && *mc > *gc) ++wins_cvp;
        if (g.engagement_per_view && m.engagement_per_view &&
            *m.engagement_per_view > *g.engagement_per_view)
            ++wins_eng;
        if (g.successful_play_rate && m.successful_play_rate &&
            *m.successful_play_rate > *g.successful_play_rate)
            ++wins_succ;
    }
    Criterion c{7, false, ""};
    // one-sided sign test at 5 replicates: all 5 wins gives p = 1/32 < 0.05
    c.pass = wins_cvp == static_cast<int>(reps) && wins_eng == static_cast<int>(reps) &&
             wins_succ == static_cast<int>(reps);
    c.detail = "model>genre wins of " + std::to_string(reps) + ": cvp@" +
               std::to_string(x) + "=" + std::to_string(wins_cvp) +
               ", eng/view=" + std::to_string(wins_eng) +
               ", success=" + std::to_string(wins_succ);
    return c;
}

// ---------------------------------------------------------------- criterion 8

Criterion criterion_8() {
    // construction check on defaults: expected fresh plays per fetch, at the
    // generator's representative fresh affinity (unpersonalized slots)
    const BehaviorParams bp;
    const ServingConfig sv;
    const double aff = 0.3, rel = 1.0, appeal = 0.6;
    const double scroll_visible = 1.0 + (1.0 - sv.scroll_stop_prob);
    const double per_scroll =
        scroll_visible * play_probability(Surface::Scroll, aff, rel, appeal, bp);
    const double per_grid = static_cast<double>(sv.fresh_slots[1]) *
                            play_probability(Surface::Grid, aff, rel, appeal, bp);
    const double per_home = static_cast<double>(sv.fresh_slots[0]) *
                            play_probability(Surface::Home, aff, rel, appeal, bp);
    const bool construction = per_scroll > per_grid && per_grid > per_home;

    // end-to-end: one surface at a time, saturated pacing; rank by budget
    // delivery and fresh engagement volume
    const int reps = 5;
    std::array<double, 3> met{}, eng{};
    for (int rep = 0; rep < reps; ++rep) {
        for (int s = 0; s < 3; ++s) {
            ScenarioConfig cfg = scaled_base(7800 + static_cast<uint64_t>(rep));
            cfg.users = 700;
            cfg.contents_per_day = 300.0;  // saturate pacing so delivery separates
            cfg.serving.surface_mix = {0.0, 0.0, 0.0};
            cfg.serving.surface_mix[static_cast<size_t>(s)] = 1.0;
            auto result = run_simulation(cfg);
            auto ledger = ledger_from_contents(result.contents, cfg.genres);
            ViewLedger judged;
            const Tick cutoff = cfg.total_ticks() - 2 * cfg.serving.latency_target_ticks();
            for (auto& e : ledger.entries)
                if (e.created_at <= cutoff) judged.entries.push_back(std::move(e));
            met[static_cast<size_t>(s)] +=
                cvp(judged, static_cast<int64_t>(cfg.serving.views_min), 0).value_or(0.0) /
                reps;
            uint64_t fresh_eng = 0;
            for (const auto& ev : result.events)
                if (ev.fresh && ev.engaged) ++fresh_eng;
            eng[static_cast<size_t>(s)] += static_cast<double>(fresh_eng) /
                                           static_cast<double>(delivered_fetches(result.events)) /
                                           reps;
        }
    }
    // indices: 0 Home, 1 Grid, 2 Scroll; want Scroll > Grid > Home
    const bool sim_cvp = met[2] > met[1] && met[1] > met[0];
    const bool sim_eng = eng[2] > eng[1] && eng[1] > eng[0];

    Criterion c{8, false, ""};
    c.pass = construction && sim_cvp && sim_eng;
    c.detail = "construction fresh plays/fetch scroll/grid/home = " + fmt(per_scroll) + "/" +
               fmt(per_grid) + "/" + fmt(per_home) + "; sim budget-met = " + fmt(met[2]) +
               "/" + fmt(met[1]) + "/" + fmt(met[0]) + "; fresh eng/fetch = " + fmt(eng[2]) +
               "/" + fmt(eng[1]) + "/" + fmt(eng[0]);
    return c;
}

// ---------------------------------------------------------------- criterion 9

double bias_at(const std::vector<BiasRow>& rows, const std::string& metric) {
    for (const auto& r : rows)
        if (r.metric == metric && r.defined) return std::abs(r.bias);
    return std::numeric_limits<double>::quiet_NaN();
}

Criterion criterion_9() {
    ScenarioConfig cfg = scaled_base(7900);
    cfg.users = 900;  // enough backlog that the doubled budget is contended
    cfg.contents_per_day = 80.0;
    const nlohmann::json treat{
        {"serving", {{"fresh_slots", {{"home", 4}, {"grid", 8}, {"scroll", 4}}}}}};
    std::vector<uint64_t> seeds;
    for (uint64_t s = 7901; s <= 7910; ++s) seeds.push_back(s);

    auto plan_for = [&](Design d) {
        ExperimentPlan p;
        p.design = d;
        p.salt = "accept-9";
        p.arms = {{"control", 0.5, nlohmann::json::object()}, {"treat", 0.5, treat}};
        p.replicate_seeds = seeds;
        return p;
    };
    const std::string metric = "cvp@150";
    auto ul_rows = run_bias_analysis(plan_for(Design::UserLevel), cfg);
    auto pl_rows = run_bias_analysis(plan_for(Design::ParallelLifecycle), cfg);
    const double bias_ul = bias_at(ul_rows, metric);
    const double bias_pl = bias_at(pl_rows, metric);

    // A/A: identical arms must agree within 2 replicate standard deviations
    bool aa_ok = true;
    std::string aa_detail;
    for (Design d : {Design::UserLevel, Design::UserContent, Design::ParallelLifecycle}) {
        ExperimentPlan p = plan_for(d);
        p.arms[1].overrides = nlohmann::json::object();
        p.replicate_seeds = {7921, 7922, 7923, 7924, 7925, 7926, 7927};
        auto arms = run_experiment(p, cfg);
        // per-replicate deltas: the arms share a world per replicate, so the
        // spread of the delta itself is the right yardstick
        std::vector<double> deltas;
        for (size_t r = 0; r < arms[0].replicates.size(); ++r) {
            auto a = cvp_at(arms[0].replicates[r], 150), b = cvp_at(arms[1].replicates[r], 150);
            if (a && b) deltas.push_back(*b - *a);
        }
        if (deltas.size() < 2) { aa_ok = false; continue; }
        double mean = 0.0;
        for (double v : deltas) mean += v / static_cast<double>(deltas.size());
        double var = 0.0;
        for (double v : deltas) var += (v - mean) * (v - mean);
        const double sd = std::sqrt(var / static_cast<double>(deltas.size() - 1));
        if (std::abs(mean) > 2.0 * sd) aa_ok = false;
        aa_detail += std::string(" ") + to_string(d) + "=" + fmt(std::abs(mean)) + "<=" +
                     fmt(2.0 * sd);
    }

    Criterion c{9, false, ""};
    c.pass = std::isfinite(bias_ul) && std::isfinite(bias_pl) && bias_ul > bias_pl && aa_ok;
    c.detail = "|bias| " + metric + " user_level=" + fmt(bias_ul) +
               " > parallel=" + fmt(bias_pl) + (aa_ok ? "; A/A ok:" : "; A/A FAIL:") +
               aa_detail;
    return c;
}

// --------------------------------------------------------------- criterion 10

Criterion criterion_10() {
    ScenarioConfig cfg = scaled_base(8000);
    auto a = run_simulation(cfg);
    auto b = run_simulation(cfg);
    std::ostringstream sa, sb;
    for (const auto& ev : a.events) sa << format_event(ev) << '\n';
    for (const auto& ev : b.events) sb << format_event(ev) << '\n';
    const std::string ta = sa.str(), tb = sb.str();
    const auto start = std::chrono::steady_clock::now();
    const bool same = ta == tb;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Criterion c{10, false, ""};
    c.pass = same && !ta.empty() && secs < 1.0;
    c.detail = std::to_string(a.events.size()) + " events, byte-identical=" +
               (same ? "yes" : "NO") + ", compare " + fmt(secs) + "s";
    return c;
}

// --------------------------------------------------------------- criterion 11

Criterion criterion_11() {
    EmbeddingConfig ec;
    ec.noise_scale = 0.0;
    const double tau = 0.2;
    const uint32_t view_budget = 400;  // configurable; 40 updates at the default cadence
    const uint32_t n_updates = view_budget / ec.update_every_plays;
    const int starts = 50;

    Rng rng(0xACCE5511);
    bool monotone = true, under_tau = true;
    std::vector<double> mean_curve(n_updates + 1, 0.0);
    for (int s = 0; s < starts; ++s) {
        Vec truth(static_cast<size_t>(ec.dim));
        for (double& v : truth) v = rng.normal();
        normalize(truth);
        Vec est = init_random(rng, ec);

        double prev = cosine_distance(est, truth);
        mean_curve[0] += prev / starts;
        for (uint32_t k = 0; k < n_updates; ++k) {
            est = update_embedding(est, truth, k, rng, ec);
            const double d = cosine_distance(est, truth);
            if (d > prev + 1e-12) monotone = false;
            prev = d;
            mean_curve[k + 1] += d / starts;
        }
        if (prev >= tau) under_tau = false;
    }

    // saturating: gains per update shrink. Smooth the mean progress curve
    // (1 - distance drop) with a 3-wide window, then check second differences.
    // The first few updates rotate a nearly orthogonal random start, where
    // cosine distance is maximally insensitive; the saturation law applies
    // once the curve is meaningfully below its starting plateau.
    std::vector<double> progress(mean_curve.size());
    for (size_t i = 0; i < mean_curve.size(); ++i) progress[i] = mean_curve[0] - mean_curve[i];
    std::vector<double> smooth(progress.size());
    for (size_t i = 0; i < progress.size(); ++i) {
        const size_t lo = i > 0 ? i - 1 : 0;
        const size_t hi = std::min(i + 1, progress.size() - 1);
        smooth[i] = (progress[lo] + progress[i] + progress[hi]) / 3.0;
    }
    size_t from = 2;  // skip the window edge
    while (from < mean_curve.size() && mean_curve[from] > 0.5) ++from;
    bool saturating = from + 1 < smooth.size();
    for (size_t i = std::max<size_t>(from, 2); i + 1 < smooth.size(); ++i)
        if (smooth[i + 1] - 2.0 * smooth[i] + smooth[i - 1] > 1e-9) saturating = false;

    Criterion c{11, false, ""};
    c.pass = monotone && under_tau && saturating;
    c.detail = std::to_string(starts) + " starts, final distance " +
               fmt(mean_curve.back()) + " < tau=" + fmt(tau) + " within " +
               std::to_string(view_budget) + " views; monotone=" +
               (monotone ? "yes" : "NO") + ", saturating=" + (saturating ? "yes" : "NO");
    return c;
}

}  // namespace

int main() {
    std::vector<std::function<Criterion()>> criteria{
        criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5,  criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            c = criteria[i]();
        } catch (const std::exception& e) {
            c.id = static_cast<int>(i + 1);
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        if (!c.pass) ++failures;
        std::printf("ACCEPTANCE %d: %s - %s\n", static_cast<int>(i + 1),
                    c.pass ? "PASS" : "FAIL", c.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
