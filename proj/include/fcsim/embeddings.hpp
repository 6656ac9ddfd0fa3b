#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "fcsim/domain.hpp"
#include "fcsim/rng.hpp"
#include "fcsim/vec.hpp"

namespace fcsim {

struct EmbeddingConfig {
    int dim = 32;
    double sigma = 1.0;                    // random-init scale
    double eta0 = 0.1;                     // base learning rate
    double k0 = 50.0;                      // learning-rate decay scale, in updates
    double noise_scale = 0.05;             // per-update feedback noise
    uint64_t high_view_threshold = 10'000; // posts above this feed the genre index
    double model_fidelity = 0.8;           // stand-in model quality rho
    uint32_t update_every_plays = 10;
};

// Per-genre running sum of converged embeddings of high-view posts.
// Average retrievable in O(D). Guards against double insertion by id.
class GenreIndex {
public:
    // Returns false (and changes nothing) when the content id was already added.
    bool add(uint16_t genre, uint32_t content_id, const Vec& embedding);

    std::optional<Vec> average(uint16_t genre) const;
    uint64_t count(uint16_t genre) const;

private:
    struct Slot {
        Vec sum;
        uint64_t count = 0;
    };
    std::unordered_map<uint16_t, Slot> slots_;
    std::unordered_set<uint32_t> seen_;
};

// Adds c's current est_embedding to its genre's slot. Call when views cross
// the high-view threshold; the embedding is frozen at that moment.
bool genre_update(GenreIndex& index, const ContentState& c);

// e ~ N(0, sigma^2) per coordinate.
Vec init_random(Rng& rng, const EmbeddingConfig& cfg);

// Genre-average of high-view posts; falls back to init_random for a genre
// with no high-view posts yet.
Vec init_genre_average(uint16_t genre, const GenreIndex& index, Rng& rng,
                       const EmbeddingConfig& cfg);

// Stand-in for a learned initializer: e = rho * true + sqrt(1 - rho^2) * g,
// g ~ N(0, I/D), normalized. rho = cfg.model_fidelity.
Vec init_model_based(const ContentFeatures& features, const Vec& true_emb, Rng& rng,
                     const EmbeddingConfig& cfg);

// est <- est + eta_k * ((true + noise) - est), eta_k = eta0 / (1 + k / k0).
Vec update_embedding(const Vec& est, const Vec& true_emb, uint32_t k, Rng& rng,
                     const EmbeddingConfig& cfg);

inline double learning_rate(uint32_t k, const EmbeddingConfig& cfg) {
    return cfg.eta0 / (1.0 + static_cast<double>(k) / cfg.k0);
}

}  // namespace fcsim
