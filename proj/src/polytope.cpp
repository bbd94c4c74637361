#include "kkm/polytope.hpp"

#include "kkm/linprog.hpp"

#include <algorithm>
#include <set>

namespace kkm {

namespace {

// All nonempty subsets of {0,...,n-1}.
std::vector<std::vector<int>> nonempty_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

int affine_rank(const std::vector<RatPoint>& points) {
    if (points.size() <= 1) return 0;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> r(points[i].dim());
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = points[i][j] - points[0][j];
        rows.push_back(std::move(r));
    }
    // Gaussian elimination over Rat.
    int rank = 0;
    std::size_t ncols = points[0].dim();
    for (std::size_t col = 0; col < ncols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
        auto& prow = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
            Rat f = rows[r][col] / prow[col];
            for (std::size_t j = col; j < ncols; ++j) rows[r][j] -= f * prow[j];
        }
        ++rank;
    }
    return rank;
}

void PolytopeModel::finalize() {
    for (auto& f : faces_) std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
    std::sort(faces_.begin(), faces_.end(), [](const FaceRecord& a, const FaceRecord& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });
    face_index_.clear();
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        faces_[i].id = static_cast<FaceId>(i);
        if (!face_index_.emplace(faces_[i].vertex_ids, faces_[i].id).second)
            throw Error("polytope: duplicate face vertex set");
    }
    subfaces_.assign(faces_.size(), {});
    all_faces_.clear();
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        all_faces_.push_back(static_cast<FaceId>(i));
        for (std::size_t j = 0; j < faces_.size(); ++j) {
            if (std::includes(faces_[i].vertex_ids.begin(), faces_[i].vertex_ids.end(),
                              faces_[j].vertex_ids.begin(), faces_[j].vertex_ids.end()))
                subfaces_[i].push_back(static_cast<FaceId>(j));
        }
    }
    if (!contains(ref_point_)) throw Error("polytope: reference point p is not in P");
}

PolytopeModel PolytopeModel::simplex(int k) {
    if (k < 2) throw Error("simplex: k must be >= 2");
    PolytopeModel P;
    P.kind_ = Kind::Simplex;
    P.dim_ = k - 1;
    for (int i = 0; i < k; ++i) {
        RatPoint v(static_cast<std::size_t>(k));
        v[static_cast<std::size_t>(i)] = 1;
        P.vertices_.push_back(std::move(v));
    }
    for (auto& T : nonempty_subsets(k)) {
        if (static_cast<int>(T.size()) == k) continue;  // P itself is not in F(P)
        FaceRecord f;
        f.vertex_ids = T;
        f.dim = static_cast<int>(T.size()) - 1;
        P.faces_.push_back(std::move(f));
    }
    RatPoint p(static_cast<std::size_t>(k));
    for (auto& c : p.coords) c = Rat(1, k);
    P.ref_point_ = std::move(p);
    P.finalize();
    return P;
}

PolytopeModel PolytopeModel::simplex_product(int m, int d) {
    if (m < 2 || d < 1) throw Error("simplex_product: need m >= 2, d >= 1");
    PolytopeModel P;
    P.kind_ = Kind::SimplexProduct;
    P.dim_ = (m - 1) * d;
    P.m_ = m;
    P.d_ = d;

    // Vertices: tuples in [m]^d, lexicographic.
    std::size_t nverts = 1;
    for (int t = 0; t < d; ++t) nverts *= static_cast<std::size_t>(m);
    for (std::size_t id = 0; id < nverts; ++id) {
        RatPoint v(static_cast<std::size_t>(m * d));
        std::size_t rest = id;
        for (int t = d - 1; t >= 0; --t) {
            int j = static_cast<int>(rest % static_cast<std::size_t>(m));
            rest /= static_cast<std::size_t>(m);
            v[static_cast<std::size_t>(t * m + j)] = 1;
        }
        P.vertices_.push_back(std::move(v));
    }

    // Faces: products of nonempty vertex subsets per factor, excluding the
    // full product.
    auto subsets = nonempty_subsets(m);
    std::vector<std::size_t> choice(static_cast<std::size_t>(d), 0);
    for (;;) {
        bool all_full = true;
        for (int t = 0; t < d; ++t)
            if (subsets[choice[static_cast<std::size_t>(t)]].size() != static_cast<std::size_t>(m))
                all_full = false;
        if (!all_full) {
            FaceRecord f;
            f.dim = 0;
            std::vector<int> ids = {0};
            for (int t = 0; t < d; ++t) {
                const auto& S = subsets[choice[static_cast<std::size_t>(t)]];
                f.dim += static_cast<int>(S.size()) - 1;
                std::vector<int> next;
                for (int base : ids)
                    for (int j : S) next.push_back(base * m + j);
                ids = std::move(next);
            }
            f.vertex_ids = std::move(ids);
            P.faces_.push_back(std::move(f));
        }
        int t = d - 1;
        while (t >= 0) {
            if (++choice[static_cast<std::size_t>(t)] < subsets.size()) break;
            choice[static_cast<std::size_t>(t)] = 0;
            --t;
        }
        if (t < 0) break;
    }

    RatPoint p(static_cast<std::size_t>(m * d));
    for (auto& c : p.coords) c = Rat(1, m);
    P.ref_point_ = std::move(p);
    P.finalize();
    return P;
}

PolytopeModel PolytopeModel::from_data(std::vector<RatPoint> vertices,
                                       std::vector<std::vector<int>> face_vertex_sets,
                                       RatPoint p) {
    if (vertices.empty()) throw Error("polytope: no vertices");
    PolytopeModel P;
    P.kind_ = Kind::Explicit;
    P.vertices_ = std::move(vertices);
    P.dim_ = affine_rank(P.vertices_);
    for (auto& ids : face_vertex_sets) {
        if (ids.empty()) throw Error("polytope: empty face vertex set");
        std::sort(ids.begin(), ids.end());
        FaceRecord f;
        std::vector<RatPoint> pts;
        for (int id : ids) pts.push_back(P.vertices_.at(static_cast<std::size_t>(id)));
        f.dim = affine_rank(pts);
        if (f.dim >= P.dim_) throw Error("polytope: face has full dimension");
        f.vertex_ids = std::move(ids);
        P.faces_.push_back(std::move(f));
    }
    P.ref_point_ = std::move(p);
    P.finalize();

    // Lattice closure: the intersection of two face vertex sets must itself
    // be a face's vertex set, or empty.
    for (const auto& a : P.faces_)
        for (const auto& b : P.faces_) {
            std::vector<int> inter;
            std::set_intersection(a.vertex_ids.begin(), a.vertex_ids.end(), b.vertex_ids.begin(),
                                  b.vertex_ids.end(), std::back_inserter(inter));
            if (!inter.empty() && P.face_index_.find(inter) == P.face_index_.end() &&
                inter != a.vertex_ids && inter != b.vertex_ids)
                throw Error("polytope: face lattice not closed under intersection");
        }
    return P;
}

FaceId PolytopeModel::face_by_vertex_set(const std::vector<int>& sorted_ids) const {
    auto it = face_index_.find(sorted_ids);
    if (it == face_index_.end()) throw Error("polytope: no face with that vertex set");
    return it->second;
}

void PolytopeModel::set_reference_point(RatPoint p) {
    if (!contains(p)) throw Error("polytope: reference point p is not in P");
    ref_point_ = std::move(p);
}

bool PolytopeModel::contains(const RatPoint& v) const {
    if (v.dim() != static_cast<std::size_t>(ambient_dim())) return false;
    if (kind_ == Kind::Simplex || kind_ == Kind::SimplexProduct) {
        // Block structure makes membership a coordinate check.
        int blocks = (kind_ == Kind::Simplex) ? 1 : d_;
        int width = (kind_ == Kind::Simplex) ? static_cast<int>(v.dim()) : m_;
        for (int t = 0; t < blocks; ++t) {
            Rat sum = 0;
            for (int j = 0; j < width; ++j) {
                const Rat& c = v[static_cast<std::size_t>(t * width + j)];
                if (c < 0) return false;
                sum += c;
            }
            if (sum != 1) return false;
        }
        return true;
    }
    return in_convex_hull(v, vertices_).has_value();
}

FaceId PolytopeModel::support(const RatPoint& v) const {
    if (!contains(v)) throw Error("support: point is not in P");
    if (kind_ == Kind::Simplex || kind_ == Kind::SimplexProduct) {
        int blocks = (kind_ == Kind::Simplex) ? 1 : d_;
        int width = (kind_ == Kind::Simplex) ? static_cast<int>(v.dim()) : m_;
        // Per-factor supports are the nonzero coordinate patterns.
        std::vector<std::vector<int>> supp(static_cast<std::size_t>(blocks));
        bool all_full = true;
        for (int t = 0; t < blocks; ++t) {
            for (int j = 0; j < width; ++j)
                if (v[static_cast<std::size_t>(t * width + j)] != 0)
                    supp[static_cast<std::size_t>(t)].push_back(j);
            if (supp[static_cast<std::size_t>(t)].size() != static_cast<std::size_t>(width))
                all_full = false;
        }
        if (all_full) return kWholePolytope;
        if (kind_ == Kind::Simplex) return face_by_vertex_set(supp[0]);
        std::vector<int> ids = {0};
        for (int t = 0; t < blocks; ++t) {
            std::vector<int> next;
            for (int base : ids)
                for (int j : supp[static_cast<std::size_t>(t)]) next.push_back(base * m_ + j);
            ids = std::move(next);
        }
        std::sort(ids.begin(), ids.end());
        return face_by_vertex_set(ids);
    }
    // Explicit polytope: scan faces in order. Ordering by dimension first
    // makes the first containing face the minimal one.
    for (const auto& f : faces_) {
        std::vector<RatPoint> gens;
        for (int id : f.vertex_ids) gens.push_back(vertices_[static_cast<std::size_t>(id)]);
        if (in_convex_hull(v, gens)) return f.id;
    }
    return kWholePolytope;
}

const std::vector<FaceId>& PolytopeModel::faces_within(FaceId sigma) const {
    if (sigma == kWholePolytope) return all_faces_;
    return subfaces_.at(static_cast<std::size_t>(sigma));
}

RatPoint PolytopeModel::face_barycenter(FaceId id) const {
    const auto& f = face(id);
    RatPoint b(static_cast<std::size_t>(ambient_dim()));
    for (int vid : f.vertex_ids) b = b + vertices_[static_cast<std::size_t>(vid)];
    return Rat(1, static_cast<long>(f.vertex_ids.size())) * b;
}

int PolytopeModel::vertex_by_tuple(const std::vector<int>& tuple) const {
    if (kind_ != Kind::SimplexProduct || tuple.size() != static_cast<std::size_t>(d_))
        throw Error("vertex_by_tuple: not a product polytope tuple");
    int id = 0;
    for (int t = 0; t < d_; ++t) {
        int j = tuple[static_cast<std::size_t>(t)];
        if (j < 0 || j >= m_) throw Error("vertex_by_tuple: index out of range");
        id = id * m_ + j;
    }
    return id;
}

std::vector<int> PolytopeModel::tuple_of_vertex(int id) const {
    if (kind_ != Kind::SimplexProduct) throw Error("tuple_of_vertex: not a product polytope");
    std::vector<int> tuple(static_cast<std::size_t>(d_));
    for (int t = d_ - 1; t >= 0; --t) {
        tuple[static_cast<std::size_t>(t)] = id % m_;
        id /= m_;
    }
    return tuple;
}

AnchorTable default_anchors(const PolytopeModel& P, int n_colors) {
    AnchorTable A;
    std::vector<RatPoint> row;
    for (const auto& f : P.faces()) row.push_back(P.face_barycenter(f.id));
    A.y.assign(static_cast<std::size_t>(n_colors), row);
    return A;
}

}  // namespace kkm
