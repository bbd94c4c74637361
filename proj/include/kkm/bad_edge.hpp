#pragma once

#include "kkm/cover.hpp"
#include "kkm/polytope.hpp"
#include "kkm/triangulation.hpp"

#include <utility>
#include <vector>

namespace kkm {

/// Vertex labels lambda: V -> F(P), f: V -> [n], y: V -> P, plus cached
/// supports. Maintained invariants:
///   (P1) v in A^{f(v)}_{lambda(v)}
///   (P2) y(v) in lambda(v), lambda(v) <= supp(v), y(v) = anchors[f(v)][lambda(v)]
struct Labeling {
    std::vector<FaceId> lambda;
    std::vector<int> f;
    std::vector<RatPoint> y;
    std::vector<FaceId> supp;
};

/// One elimination step, for the optional trace log. iteration 0 is the
/// setup (splitting the bad edge itself).
struct TraceEntry {
    int iteration = 0;
    int j = 0;             // queue index chosen in Step (2); 0 for the setup
    int chosen_vertex = -1;
    int new_vertex = -1;
    RatPoint new_coords;
    int color = -1;
    FaceId tau = kWholePolytope;
};

/// Smallest allowed color, then smallest face tau <= supp in the fixed face
/// order, with v in A^color_tau. Throws CoverViolation when no pair exists.
std::pair<int, FaceId> choose_label(const RatPoint& v, FaceId supp, std::vector<int> allowed,
                                    const CoverOracle& O, const PolytopeModel& P);

/// Labels every vertex of T with choose_label over all n colors.
Labeling initial_labeling(const Triangulation& T, const CoverOracle& O, const PolytopeModel& P,
                          const AnchorTable& anchors);

struct EliminationOptions {
    bool check_claims = true;  // live structural assertions on the algorithm state
    std::vector<TraceEntry>* trace = nullptr;
    long iteration_cap = 1000000;
};

/// Queue-driven elimination of one bad edge: subdivides it, then drains the
/// cascade of new bad edges created by the fresh barycenter labels. On
/// return the edge is gone and the bad-edge set shrank by exactly that edge.
/// Mutates T and L in place; see the value-returning overload below.
void eliminate_bad_edge(Triangulation& T, Labeling& L, std::pair<int, int> edge,
                        const CoverOracle& O, const PolytopeModel& P, const AnchorTable& anchors,
                        const EliminationOptions& opts = {});

std::pair<Triangulation, Labeling> eliminate_bad_edge(const Triangulation& T, const Labeling& L,
                                                      std::pair<int, int> edge,
                                                      const CoverOracle& O,
                                                      const PolytopeModel& P,
                                                      const AnchorTable& anchors,
                                                      const EliminationOptions& opts = {});

/// Repeated elimination of the lexicographically smallest bad edge until the
/// labeling is proper: (P1), (P2), and (P3) all colors distinct within every
/// maximal simplex.
std::pair<Triangulation, Labeling> make_good(const Triangulation& T, const CoverOracle& O,
                                             const PolytopeModel& P, const AnchorTable& anchors,
                                             const EliminationOptions& opts = {});

/// Test helper: re-verify (P1) by oracle query, (P2) by exact hull
/// membership, and optionally (P3) on every maximal simplex. Throws on the
/// first violated property.
void verify_labeling(const Triangulation& T, const Labeling& L, const CoverOracle& O,
                     const PolytopeModel& P, const AnchorTable& anchors, bool require_p3);

}  // namespace kkm
