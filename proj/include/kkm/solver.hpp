#pragma once

#include "kkm/bad_edge.hpp"
#include "kkm/cover.hpp"
#include "kkm/polytope.hpp"
#include "kkm/triangulation.hpp"

#include <utility>
#include <vector>

namespace kkm {

/// Finite-precision witness for the sparse colorful KKM conclusion: an
/// injection pi, faces tau_1..tau_k, a simplex of diameter <= eps whose i-th
/// vertex lies in A^{pi(i)}_{tau_i}, and exact hull coefficients with
/// sum c_i * y[pi(i)][tau_i] = p.
struct SolveCertificate {
    std::vector<int> pi;
    std::vector<FaceId> tau;
    std::vector<int> witness_ids;
    std::vector<RatPoint> witness;
    std::vector<Rat> coeffs;
    Rat eps;
};

struct SolveOptions {
    EliminationOptions elimination{.check_claims = false};
    /// Optional starting triangulation for explicit polytopes.
    const Triangulation* start = nullptr;
};

/// Scan the maximal simplices in insertion order for one whose anchor images
/// capture p; exact LP membership per candidate. The labeling must satisfy
/// (P2) and (P3).
std::pair<std::vector<int>, std::vector<Rat>> panchromatic_search(const Triangulation& T,
                                                                  const Labeling& L,
                                                                  const RatPoint& p);

/// Full pipeline: refine to diameter eps, make the labeling good, search for
/// the panchromatic simplex, certify.
SolveCertificate solve(const PolytopeModel& P, const CoverOracle& O, const AnchorTable& anchors,
                       const Rat& eps, const SolveOptions& opts = {});

/// Exact one-pass self-validation: injectivity, per-vertex oracle
/// membership, hull identity, diameter bound. Throws on failure.
void validate_certificate(const SolveCertificate& cert, const PolytopeModel& P,
                          const CoverOracle& O, const AnchorTable& anchors);

}  // namespace kkm
