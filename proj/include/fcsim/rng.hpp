#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace fcsim {

// Deterministic counter-based PRNG (splitmix64 core). Every stochastic
// component owns its own stream derived via split(), so arms, replicates
// and generators stay reproducible in isolation.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    uint64_t uniform_int(uint64_t n) { return n ? next_u64() % n : 0; }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller, one value per call (the sine half is discarded so the
    // stream position does not depend on call parity).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Marsaglia-Tsang; shape < 1 handled via the boost trick.
    double gamma(double shape) {
        if (shape < 1.0) {
            double u = uniform();
            while (u <= 0.0) u = uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double beta(double a, double b) {
        double x = gamma(a);
        double y = gamma(b);
        double s = x + y;
        return s > 0.0 ? x / s : 0.5;
    }

    Rng split(uint64_t tag) const { return Rng(mix(state_, tag)); }
    Rng split(std::string_view tag) const { return split(hash_str(tag)); }

    static uint64_t mix(uint64_t a, uint64_t b) {
        uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // FNV-1a
    static uint64_t hash_str(std::string_view s) {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    uint64_t state_;
};

}  // namespace fcsim
