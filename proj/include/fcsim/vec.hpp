#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fcsim {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec& normalize(Vec& a) {
    double n = norm(a);
    if (n == 0.0) throw std::invalid_argument("normalize: zero vector");
    for (double& x : a) x /= n;
    return a;
}

inline Vec normalized(Vec a) {
    normalize(a);
    return a;
}

inline double cosine_similarity(const Vec& a, const Vec& b) {
    double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("cosine_similarity: zero vector");
    return dot(a, b) / (na * nb);
}

// 1 - cos(a, b), in [0, 2]
inline double cosine_distance(const Vec& a, const Vec& b) {
    return 1.0 - cosine_similarity(a, b);
}

}  // namespace fcsim
