#include "kkm/cover.hpp"

#include <random>

namespace kkm {

std::vector<std::vector<int>> subsets_of_size(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

bool covered_at(const CoverOracle& O, const PolytopeModel& P, const std::vector<int>& colors,
                FaceId sigma, const RatPoint& x) {
    for (FaceId tau : P.faces_within(sigma))
        for (int i : colors)
            if (O.query(i, tau, x)) return true;
    return false;
}

bool violation_valid(const CoverOracle& O, const PolytopeModel& P,
                     const ViolationCertificate& cert) {
    if (P.support(cert.x) != cert.sigma) return false;
    return !covered_at(O, P, cert.colors, cert.sigma, cert.x);
}

std::optional<ViolationCertificate> falsify_weak_cover(const CoverOracle& O,
                                                       const PolytopeModel& P, int m,
                                                       int samples, unsigned long seed) {
    const int n = O.colors();
    if (m > n) throw Error("falsify_weak_cover: m exceeds the number of colors");
    const auto subsets = subsets_of_size(n, n - m + 1);
    std::mt19937_64 rng(seed);

    // Sample within one face (or the whole polytope): positive dyadic weights
    // on its vertices, normalized. All arithmetic stays rational.
    auto sample_point = [&](const std::vector<int>& vertex_ids) {
        RatPoint p(static_cast<std::size_t>(P.ambient_dim()));
        Rat total = 0;
        std::vector<Rat> w(vertex_ids.size());
        for (auto& wi : w) {
            wi = Rat(1 + static_cast<long>(rng() % 64), 64);
            total += wi;
        }
        for (std::size_t i = 0; i < vertex_ids.size(); ++i)
            p = p + (w[i] / total) * P.vertex(vertex_ids[i]);
        return p;
    };

    std::vector<std::vector<int>> regions;
    for (const auto& f : P.faces()) regions.push_back(f.vertex_ids);
    {
        std::vector<int> all(P.vertex_count());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        regions.push_back(std::move(all));
    }

    for (const auto& region : regions) {
        for (int s = 0; s < samples; ++s) {
            RatPoint x = sample_point(region);
            FaceId sigma = P.support(x);
            for (const auto& I : subsets) {
                if (!covered_at(O, P, I, sigma, x)) return ViolationCertificate{x, I, sigma};
            }
        }
    }
    return std::nullopt;
}

MaxCoordCover::MaxCoordCover(const PolytopeModel& P, int n, std::vector<int> empty_colors,
                             std::vector<std::vector<Rat>> weights)
    : P_(P), n_(n), empty_(static_cast<std::size_t>(n), false), weights_(std::move(weights)) {
    if (P.kind() == PolytopeModel::Kind::Explicit)
        throw Error("MaxCoordCover: built-in cover needs a simplex or simplex product");
    for (int c : empty_colors) empty_.at(static_cast<std::size_t>(c)) = true;
    if (!weights_.empty() && weights_.size() != static_cast<std::size_t>(n))
        throw Error("MaxCoordCover: one weight vector per color expected");
    for (const auto& w : weights_) {
        if (w.size() != static_cast<std::size_t>(P.ambient_dim()))
            throw Error("MaxCoordCover: weight vector has wrong dimension");
        for (const auto& wi : w)
            if (wi <= 0) throw Error("MaxCoordCover: weights must be positive");
    }
}

bool MaxCoordCover::query(int color, FaceId tau, const RatPoint& x) const {
    if (color < 0 || color >= n_) throw Error("MaxCoordCover: color out of range");
    if (empty_[static_cast<std::size_t>(color)]) return false;
    const auto& f = P_.face(tau);
    if (f.vertex_ids.size() != 1) return false;
    const int blocks = (P_.kind() == PolytopeModel::Kind::Simplex) ? 1 : P_.product_d();
    const int width = (P_.kind() == PolytopeModel::Kind::Simplex)
                          ? P_.ambient_dim()
                          : P_.product_m();
    auto weight = [&](int coord) -> Rat {
        return weights_.empty() ? Rat(1)
                                : weights_[static_cast<std::size_t>(color)][static_cast<std::size_t>(coord)];
    };
    const RatPoint& v = P_.vertex(f.vertex_ids[0]);
    for (int t = 0; t < blocks; ++t) {
        int j = -1;
        for (int l = 0; l < width; ++l)
            if (v[static_cast<std::size_t>(t * width + l)] == 1) j = l;
        Rat mine = weight(t * width + j) * x[static_cast<std::size_t>(t * width + j)];
        for (int l = 0; l < width; ++l)
            if (weight(t * width + l) * x[static_cast<std::size_t>(t * width + l)] > mine)
                return false;
    }
    return true;
}

}  // namespace kkm
