#include "fcsim/behavior.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcsim {

double affinity(const UserProfile& u, const ContentState& c) {
    return cosine_similarity(u.embedding, c.true_embedding);
}

double play_probability(Surface surface, double affinity, double rel, double genre_appeal,
                        const BehaviorParams& p) {
    switch (surface) {
        case Surface::Scroll:
            return 1.0;  // autoplay
        case Surface::Home:
            return logistic(p.b_home + p.affinity_gain * affinity * rel * genre_appeal);
        case Surface::Grid:
            return logistic(p.b_grid + p.affinity_gain * affinity * rel * genre_appeal);
    }
    throw std::invalid_argument("play_probability: unknown surface");
}

double sample_watch(Rng& rng, double affinity, double rel, double duration_s,
                    const BehaviorParams& p) {
    if (duration_s <= 0.0) throw std::invalid_argument("sample_watch: nonpositive duration");
    const double mu = watch_mean(affinity, rel, p);
    if (!std::isfinite(p.watch_concentration)) return mu * duration_s;
    const double a = mu * p.watch_concentration;
    const double b = (1.0 - mu) * p.watch_concentration;
    return rng.beta(a, b) * duration_s;
}

bool sample_engagement(Rng& rng, WatchOutcome outcome, double affinity, double rel,
                       const BehaviorParams& p) {
    if (outcome != WatchOutcome::Successful) return false;
    return rng.bernoulli(logistic(p.engage_bias + p.engage_gain * affinity * rel));
}

}  // namespace fcsim
