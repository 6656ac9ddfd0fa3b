#pragma once

#include <algorithm>
#include <cmath>

#include "fcsim/domain.hpp"
#include "fcsim/rng.hpp"

namespace fcsim {

// Generative model of user responses. Users respond to TRUE affinity; the
// ranker only ever sees estimated embeddings.
struct BehaviorParams {
    double b_home = -0.5;            // play bias, Home feed
    double b_grid = -1.5;            // play bias, Grid feed (16-tile competition)
    double affinity_gain = 3.0;      // a
    double watch_base = 0.36;        // base watch fraction
    double watch_gain = 0.90;        // lambda
    double watch_concentration = 5.0; // Beta concentration kappa
    double engage_bias = -4.7;
    double engage_gain = 2.0;
};

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// cos(u.embedding, c.true_embedding), in [-1, 1].
double affinity(const UserProfile& u, const ContentState& c);

// Scroll autoplays (probability 1); Home/Grid gate on a logistic click model.
double play_probability(Surface surface, double affinity, double rel, double genre_appeal,
                        const BehaviorParams& p);

// Watch fraction ~ Beta(mean mu, concentration kappa) with
// mu = clamp(watch_base + lambda * affinity * rel, 0.02, 0.98).
// Infinite concentration degenerates to the mean. Returns seconds.
double sample_watch(Rng& rng, double affinity, double rel, double duration_s,
                    const BehaviorParams& p);

// Explicit engagement fires only on Successful plays.
bool sample_engagement(Rng& rng, WatchOutcome outcome, double affinity, double rel,
                       const BehaviorParams& p);

inline double watch_mean(double affinity, double rel, const BehaviorParams& p) {
    double mu = p.watch_base + p.watch_gain * affinity * rel;
    return std::clamp(mu, 0.02, 0.98);
}

}  // namespace fcsim
