#pragma once

#include "kkm/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kkm {

/// Finite hypergraph on vertices 0..n_vertices-1, with an optional
/// d-partition (every edge must then meet each part exactly once).
struct Hypergraph {
    int n_vertices = 0;
    std::vector<std::vector<int>> edges;
    std::optional<std::vector<std::vector<int>>> parts;

    int rank() const;
    void validate() const;  // edge bounds, nonemptiness, partition discipline
};

inline constexpr int kHypergraphEdgeCap = 20;

/// Exact maximum matching (set of pairwise disjoint edges) and its size.
/// Branch and bound over the edge list; |E| capped.
std::vector<int> maximum_matching(const Hypergraph& H, int edge_cap = kHypergraphEdgeCap);
int matching_number(const Hypergraph& H, int edge_cap = kHypergraphEdgeCap);

/// Exact minimum vertex cover (piercing) size; brute force over the vertices
/// that appear in edges.
int covering_number(const Hypergraph& H, int edge_cap = kHypergraphEdgeCap);

/// Exact LP optimum of the fractional matching relaxation, with optimal edge
/// weights.
std::pair<Rat, std::vector<Rat>> fractional_matching_number(const Hypergraph& H);

/// Exact feasibility of sum_{e: v in e} f(e) = 1 for every vertex, f >= 0.
std::optional<std::vector<Rat>> perfect_fractional_matching(const Hypergraph& H);

/// Lower bound on nu(H): nu*(H)/(d-1+1/d) for rank <= d, or nu*(H)/(d-1)
/// when a d-partition is declared.
Rat furedi_matching_bound(const Hypergraph& H, int d);

/// |V|/d, valid as a lower bound on nu*(H) when a perfect fractional
/// matching exists (checked).
Rat rank_lower_bound_nustar(const Hypergraph& H, int d);

}  // namespace kkm
