#include "fcsim/embeddings.hpp"

#include <cmath>

namespace fcsim {

bool GenreIndex::add(uint16_t genre, uint32_t content_id, const Vec& embedding) {
    if (!seen_.insert(content_id).second) return false;
    Slot& slot = slots_[genre];
    if (slot.sum.empty()) slot.sum.assign(embedding.size(), 0.0);
    for (size_t i = 0; i < embedding.size(); ++i) slot.sum[i] += embedding[i];
    ++slot.count;
    return true;
}

std::optional<Vec> GenreIndex::average(uint16_t genre) const {
    auto it = slots_.find(genre);
    if (it == slots_.end() || it->second.count == 0) return std::nullopt;
    Vec avg = it->second.sum;
    for (double& x : avg) x /= static_cast<double>(it->second.count);
    return avg;
}

uint64_t GenreIndex::count(uint16_t genre) const {
    auto it = slots_.find(genre);
    return it == slots_.end() ? 0 : it->second.count;
}

bool genre_update(GenreIndex& index, const ContentState& c) {
    return index.add(c.genre, c.id, c.est_embedding);
}

Vec init_random(Rng& rng, const EmbeddingConfig& cfg) {
    Vec e(static_cast<size_t>(cfg.dim));
    for (double& x : e) x = rng.normal(0.0, cfg.sigma);
    return e;
}

Vec init_genre_average(uint16_t genre, const GenreIndex& index, Rng& rng,
                       const EmbeddingConfig& cfg) {
    if (auto avg = index.average(genre)) return *avg;
    return init_random(rng, cfg);
}

Vec init_model_based(const ContentFeatures& /*features*/, const Vec& true_emb, Rng& rng,
                     const EmbeddingConfig& cfg) {
    const double rho = cfg.model_fidelity;
    const double s = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const double gsd = 1.0 / std::sqrt(static_cast<double>(cfg.dim));
    Vec e(true_emb.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = rho * true_emb[i] + s * rng.normal(0.0, gsd);
    return normalized(std::move(e));
}

Vec update_embedding(const Vec& est, const Vec& true_emb, uint32_t k, Rng& rng,
                     const EmbeddingConfig& cfg) {
    const double eta = learning_rate(k, cfg);
    Vec out(est.size());
    for (size_t i = 0; i < est.size(); ++i) {
        double target = true_emb[i];
        if (cfg.noise_scale > 0.0) target += rng.normal(0.0, cfg.noise_scale);
        out[i] = est[i] + eta * (target - est[i]);
    }
    return out;
}

}  // namespace fcsim
