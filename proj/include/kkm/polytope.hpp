#pragma once

#include "kkm/rational.hpp"

#include <map>
#include <vector>

namespace kkm {

/// Index into PolytopeModel::faces(). kWholePolytope marks the improper face
/// P itself (used for supports of interior points; never stored in the list).
using FaceId = int;
inline constexpr FaceId kWholePolytope = -1;

struct FaceRecord {
    FaceId id = 0;
    std::vector<int> vertex_ids;  // sorted
    int dim = 0;
};

/// A (k-1)-dimensional polytope given by vertex coordinates and its full
/// lattice of non-empty proper faces, plus a reference point p in P.
/// Faces are kept in a fixed total order: by dimension, then lexicographic
/// on the sorted vertex-id set; every "choose a face" step in the artifact
/// uses this order.
class PolytopeModel {
public:
    enum class Kind { Simplex, SimplexProduct, Explicit };

    /// Standard simplex conv{e_1,...,e_k} in R^k, p = barycenter.
    static PolytopeModel simplex(int k);

    /// Product (Delta^{m-1})^d embedded in R^{m*d}, p = barycenter.
    /// Vertices are tuples (j_1,...,j_d) in [m]^d in lexicographic order.
    static PolytopeModel simplex_product(int m, int d);

    /// Explicit polytope data: coordinates, face vertex-id sets, and p.
    /// Validates lattice closure under intersection and p in P.
    static PolytopeModel from_data(std::vector<RatPoint> vertices,
                                   std::vector<std::vector<int>> face_vertex_sets,
                                   RatPoint p);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    /// Number of vertices of a maximal simplex in any triangulation of P.
    int simplex_order() const { return dim_ + 1; }
    int ambient_dim() const { return static_cast<int>(vertices_.empty() ? 0 : vertices_[0].dim()); }

    std::size_t vertex_count() const { return vertices_.size(); }
    const RatPoint& vertex(int id) const { return vertices_.at(static_cast<std::size_t>(id)); }
    const std::vector<RatPoint>& vertices() const { return vertices_; }

    const std::vector<FaceRecord>& faces() const { return faces_; }
    const FaceRecord& face(FaceId id) const { return faces_.at(static_cast<std::size_t>(id)); }
    FaceId face_by_vertex_set(const std::vector<int>& sorted_ids) const;

    const RatPoint& reference_point() const { return ref_point_; }
    void set_reference_point(RatPoint p);

    bool contains(const RatPoint& v) const;

    /// Minimal face of P containing v; kWholePolytope for interior points.
    /// Throws if v is not in P.
    FaceId support(const RatPoint& v) const;

    /// Faces tau with tau <= sigma, in face order. sigma == kWholePolytope
    /// yields every proper face.
    const std::vector<FaceId>& faces_within(FaceId sigma) const;

    RatPoint face_barycenter(FaceId id) const;

    // Product structure accessors (Kind::SimplexProduct only).
    int product_m() const { return m_; }
    int product_d() const { return d_; }
    int vertex_by_tuple(const std::vector<int>& tuple) const;
    std::vector<int> tuple_of_vertex(int id) const;

private:
    PolytopeModel() = default;
    void finalize();  // sorts faces, builds indices, validates p

    Kind kind_ = Kind::Explicit;
    int dim_ = 0;
    int m_ = 0, d_ = 0;
    std::vector<RatPoint> vertices_;
    std::vector<FaceRecord> faces_;
    RatPoint ref_point_;
    std::map<std::vector<int>, FaceId> face_index_;
    std::vector<std::vector<FaceId>> subfaces_;
    std::vector<FaceId> all_faces_;
};

/// Per-color, per-face anchor points y[i][tau], each lying in its face.
struct AnchorTable {
    std::vector<std::vector<RatPoint>> y;  // y[color][face id]

    const RatPoint& at(int color, FaceId tau) const {
        return y.at(static_cast<std::size_t>(color)).at(static_cast<std::size_t>(tau));
    }
};

/// KKMS-style default: every anchor is the barycenter of its face.
AnchorTable default_anchors(const PolytopeModel& P, int n_colors);

/// Affine dimension of a point set, exact.
int affine_rank(const std::vector<RatPoint>& points);

}  // namespace kkm
