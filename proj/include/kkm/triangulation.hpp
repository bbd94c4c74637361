#pragma once

#include "kkm/polytope.hpp"
#include "kkm/rational.hpp"

#include <set>
#include <utility>
#include <vector>

namespace kkm {

/// Pure simplicial complex triangulating a polytope: every maximal simplex
/// has exactly dim(P)+1 vertices. Cells keep their insertion order; the
/// in-place subdivision replaces one affected cell and appends its sibling,
/// so runs are deterministic.
class Triangulation {
public:
    Triangulation(std::vector<RatPoint> verts, std::vector<std::vector<int>> cells);

    const std::vector<RatPoint>& verts() const { return verts_; }
    const RatPoint& vert(int id) const { return verts_.at(static_cast<std::size_t>(id)); }
    const std::vector<std::vector<int>>& maximal() const { return cells_; }
    int order() const { return order_; }

    /// Generators of a subdivision vertex (the endpoints of the split edge);
    /// empty for original vertices.
    const std::vector<int>& creation_tag(int id) const {
        return tags_.at(static_cast<std::size_t>(id));
    }

    bool has_edge(int a, int b) const;
    std::set<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;
    const std::set<int>& cells_at(int v) const { return vert_cells_.at(static_cast<std::size_t>(v)); }

    /// Edge subdivision X(v1,v2): adds the midpoint and splits every maximal
    /// simplex containing the edge into its two halves. Returns the new
    /// vertex id. Mutating; use the free subdivide_edge for the value form.
    int subdivide(int v1, int v2);

    Rat max_edge_length_sq() const;

private:
    void index_cell(std::size_t idx);

    int order_ = 0;
    std::vector<RatPoint> verts_;
    std::vector<std::vector<int>> cells_;       // each sorted
    std::vector<std::set<int>> vert_cells_;     // vertex -> incident cell indices
    std::vector<std::vector<int>> tags_;
};

/// Canonical starting triangulation: the simplex itself, or the staircase
/// triangulation of a product of simplices.
Triangulation initial_triangulation(const PolytopeModel& P);

/// User-supplied triangulation of an explicit polytope, validated for purity,
/// affine independence, and vertex membership in P.
Triangulation initial_triangulation(const PolytopeModel& P, std::vector<RatPoint> verts,
                                    std::vector<std::vector<int>> cells);

Triangulation subdivide_edge(const Triangulation& T, int v1, int v2);

/// Longest-edge bisection until every edge has length <= eps. Ties go to the
/// lexicographically smallest vertex-id pair.
Triangulation refine_to_diameter(const Triangulation& T, const Rat& eps,
                                 long iteration_cap = 1000000);

/// Edges whose endpoints share a color under f.
std::set<std::pair<int, int>> bad_edges(const Triangulation& T, const std::vector<int>& f);

/// B(T; v): vertices u with uv a bad edge.
std::vector<int> bad_neighbors(const Triangulation& T, const std::vector<int>& f, int v);

/// Gram determinant of a simplex (squared volume scaled by (dim!)^2); exact.
Rat gram_det(const Triangulation& T, const std::vector<int>& cell);

}  // namespace kkm
