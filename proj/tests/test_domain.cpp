#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcsim/domain.hpp"
#include "fcsim/rng.hpp"

using namespace fcsim;

TEST_CASE("classify_watch thresholds") {
    CHECK(classify_watch(59.0, 60.0) == WatchOutcome::Successful);  // 59 > 58.8
    CHECK(classify_watch(2.9, 60.0) == WatchOutcome::Skip);
    CHECK(classify_watch(30.0, 60.0) == WatchOutcome::Partial);
    // ultra-short video: full watch wins over the sub-3s rule
    CHECK(classify_watch(2.0, 2.0) == WatchOutcome::Successful);
    CHECK(classify_watch(0.0, 60.0) == WatchOutcome::Skip);
}

TEST_CASE("classify_watch rejects invalid input") {
    CHECK_THROWS_AS(classify_watch(-0.1, 60.0), std::invalid_argument);
    CHECK_THROWS_AS(classify_watch(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(classify_watch(1.0, -5.0), std::invalid_argument);
}

TEST_CASE("classify_watch is exhaustive and deterministic") {
    Rng rng(7);
    for (int i = 0; i < 10'000; ++i) {
        const double d = rng.uniform(0.01, 120.0);
        const double w = rng.uniform() * d;
        const WatchOutcome a = classify_watch(w, d);
        CHECK(a == classify_watch(w, d));
        const bool success = w > 0.98 * d;
        const bool skip = w < 3.0;
        if (success) CHECK(a == WatchOutcome::Successful);
        else if (skip) CHECK(a == WatchOutcome::Skip);
        else CHECK(a == WatchOutcome::Partial);
    }
}

TEST_CASE("relevance decay") {
    GenreSpec timeless{"humor", 1.0, std::numeric_limits<double>::infinity(), 0.5};
    GenreSpec news{"news", 1.0, 6.0 * kTicksPerHour, 0.5};
    CHECK(relevance(timeless, 100.0 * kTicksPerHour) == 1.0);
    CHECK(relevance(news, 6.0 * kTicksPerHour) == doctest::Approx(0.5));
    CHECK(relevance(news, 12.0 * kTicksPerHour) == doctest::Approx(0.25));
    CHECK_THROWS_AS(relevance(news, -1.0), std::invalid_argument);
}

TEST_CASE("relevance is 1 at age 0 and non-increasing") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        GenreSpec g{"g", 1.0,
                    trial % 5 == 0 ? std::numeric_limits<double>::infinity()
                                   : rng.uniform(1.0, 500.0),
                    0.5};
        CHECK(relevance(g, 0.0) == 1.0);
        double prev = 1.0;
        double age = 0.0;
        for (int step = 0; step < 20; ++step) {
            age += rng.uniform(0.0, 100.0);
            const double r = relevance(g, age);
            CHECK(r <= prev + 1e-12);
            CHECK(r > 0.0);
            prev = r;
        }
    }
}

static ContentState make_content(uint64_t views, Stage stage, Tick created = 0) {
    ContentState c;
    c.true_embedding = {1.0, 0.0};
    c.est_embedding = {1.0, 0.0};
    c.created_at = created;
    c.stage = stage;
    c.views = views;
    if (views > 0) c.view_series = {{created, views}};
    return c;
}

TEST_CASE("lifecycle threshold boundaries") {
    LifecycleConfig cfg;
    cfg.views_min = 200;

    auto c = make_content(200, Stage::Early);
    CHECK(lifecycle_transition(c, 1, cfg) == Stage::Growth);  // >= comparison

    c = make_content(199, Stage::Early);
    CHECK(lifecycle_transition(c, 1, cfg) == Stage::Early);

    // Growth -> Mature exactly at tau
    c = make_content(300, Stage::Growth);
    c.est_embedding = {0.8, 0.6};  // cos = 0.8 -> distance 0.2
    cfg.maturity_tau = 0.2;
    CHECK(lifecycle_transition(c, 1, cfg) == Stage::Mature);
    cfg.maturity_tau = 0.19;
    CHECK(lifecycle_transition(c, 1, cfg) == Stage::Growth);
}

TEST_CASE("lifecycle ttl expiry") {
    LifecycleConfig cfg;
    for (Stage s : {Stage::Early, Stage::Growth, Stage::Mature}) {
        auto c = make_content(50, s);
        c.view_series = {{cfg.ttl_ticks, 50}};  // stays active, dies of old age
        CHECK(lifecycle_transition(c, cfg.ttl_ticks + 1, cfg) == Stage::Expired);
    }
}

TEST_CASE("lifecycle activity floor applies only after a full window") {
    LifecycleConfig cfg;
    cfg.views_min = 1'000'000;  // keep it Early
    auto c = make_content(10, Stage::Early, 0);
    // young content is not expired for slow starts
    CHECK(lifecycle_transition(c, cfg.activity_window_ticks - 1, cfg) == Stage::Early);
    // no views gained across the trailing window once old enough
    CHECK(lifecycle_transition(c, cfg.activity_window_ticks + 1, cfg) == Stage::Expired);
}

TEST_CASE("lifecycle never moves backward") {
    Rng rng(23);
    LifecycleConfig cfg;
    cfg.views_min = 50;
    for (int trial = 0; trial < 500; ++trial) {
        ContentState c = make_content(0, Stage::Early);
        Stage prev = c.stage;
        for (Tick now = 1; now < 600; ++now) {
            if (rng.bernoulli(0.4)) c.record_play(now);
            c.views = c.view_series.empty() ? 0 : c.view_series.back().second;
            if (rng.bernoulli(0.01))
                c.est_embedding = {rng.normal(), rng.normal()};
            if (c.stage != Stage::Expired) c.stage = lifecycle_transition(c, now, cfg);
            CHECK(static_cast<int>(c.stage) >= static_cast<int>(prev));
            prev = c.stage;
        }
    }
}

TEST_CASE("record_play coalesces ticks; views_at step-interpolates") {
    ContentState c = make_content(0, Stage::Early);
    c.record_play(5);
    c.record_play(5);
    c.record_play(9);
    REQUIRE(c.view_series.size() == 2);
    CHECK(c.view_series[0] == std::pair<Tick, uint64_t>{5, 2});
    CHECK(c.view_series[1] == std::pair<Tick, uint64_t>{9, 3});
    CHECK(c.views_at(4) == 0);
    CHECK(c.views_at(5) == 2);
    CHECK(c.views_at(8) == 2);
    CHECK(c.views_at(9) == 3);
    CHECK(c.views_at(100) == 3);
    CHECK(c.views == 3);
}

TEST_CASE("enum string round-trips") {
    for (Stage s : {Stage::Early, Stage::Growth, Stage::Mature, Stage::Expired})
        CHECK(stage_from_string(to_string(s)) == s);
    for (Surface s : {Surface::Home, Surface::Grid, Surface::Scroll})
        CHECK(surface_from_string(to_string(s)) == s);
    for (WatchOutcome o : {WatchOutcome::Successful, WatchOutcome::Skip, WatchOutcome::Partial})
        CHECK(outcome_from_string(to_string(o)) == o);
    CHECK_THROWS_AS(stage_from_string("bogus"), std::invalid_argument);
}
