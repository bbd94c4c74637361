#include "kkm/hypergraph.hpp"

#include "kkm/linprog.hpp"

#include <algorithm>
#include <set>

namespace kkm {

int Hypergraph::rank() const {
    std::size_t r = 0;
    for (const auto& e : edges) r = std::max(r, e.size());
    return static_cast<int>(r);
}

void Hypergraph::validate() const {
    for (const auto& e : edges) {
        if (e.empty()) throw Error("hypergraph: empty edge");
        std::set<int> s(e.begin(), e.end());
        if (s.size() != e.size()) throw Error("hypergraph: repeated vertex in an edge");
        for (int v : e)
            if (v < 0 || v >= n_vertices) throw Error("hypergraph: vertex id out of range");
    }
    if (parts) {
        std::vector<int> owner(static_cast<std::size_t>(n_vertices), -1);
        for (std::size_t p = 0; p < parts->size(); ++p)
            for (int v : (*parts)[p]) {
                if (v < 0 || v >= n_vertices || owner[static_cast<std::size_t>(v)] != -1)
                    throw Error("hypergraph: invalid partition");
                owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
            }
        for (const auto& e : edges) {
            std::set<int> met;
            for (int v : e) {
                int p = owner[static_cast<std::size_t>(v)];
                if (p < 0 || !met.insert(p).second)
                    throw Error("hypergraph: edge does not meet each part exactly once");
            }
            if (met.size() != parts->size())
                throw Error("hypergraph: edge does not meet each part exactly once");
        }
    }
}

namespace {

void matching_search(const Hypergraph& H, std::size_t from, std::vector<int>& used,
                     std::vector<int>& cur, std::vector<int>& best) {
    if (cur.size() > best.size()) best = cur;
    if (cur.size() + (H.edges.size() - from) <= best.size()) return;  // bound
    for (std::size_t i = from; i < H.edges.size(); ++i) {
        bool free = true;
        for (int v : H.edges[i])
            if (used[static_cast<std::size_t>(v)]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (int v : H.edges[i]) used[static_cast<std::size_t>(v)] = 1;
        cur.push_back(static_cast<int>(i));
        matching_search(H, i + 1, used, cur, best);
        cur.pop_back();
        for (int v : H.edges[i]) used[static_cast<std::size_t>(v)] = 0;
    }
}

}  // namespace

std::vector<int> maximum_matching(const Hypergraph& H, int edge_cap) {
    H.validate();
    if (static_cast<int>(H.edges.size()) > edge_cap)
        throw Error("maximum_matching: edge cap exceeded");
    std::vector<int> used(static_cast<std::size_t>(H.n_vertices), 0);
    std::vector<int> cur, best;
    matching_search(H, 0, used, cur, best);
    return best;
}

int matching_number(const Hypergraph& H, int edge_cap) {
    return static_cast<int>(maximum_matching(H, edge_cap).size());
}

int covering_number(const Hypergraph& H, int edge_cap) {
    H.validate();
    if (static_cast<int>(H.edges.size()) > edge_cap)
        throw Error("covering_number: edge cap exceeded");
    if (H.edges.empty()) return 0;
    // Only vertices appearing in edges can help a cover.
    std::set<int> support;
    for (const auto& e : H.edges) support.insert(e.begin(), e.end());
    std::vector<int> verts(support.begin(), support.end());
    const std::size_t nv = verts.size();
    if (nv > 24) throw Error("covering_number: too many incident vertices for brute force");

    std::vector<unsigned> edge_masks;
    for (const auto& e : H.edges) {
        unsigned m = 0;
        for (int v : e) {
            auto it = std::lower_bound(verts.begin(), verts.end(), v);
            m |= 1u << (it - verts.begin());
        }
        edge_masks.push_back(m);
    }
    int best = static_cast<int>(nv);
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (unsigned em : edge_masks)
            if (!(em & mask)) {
                covers = false;
                break;
            }
        if (covers) best = size;
    }
    return best;
}

std::pair<Rat, std::vector<Rat>> fractional_matching_number(const Hypergraph& H) {
    H.validate();
    if (H.edges.empty()) return {Rat(0), {}};
    const std::size_t ne = H.edges.size();
    std::vector<LpConstraint> cons;
    for (int v = 0; v < H.n_vertices; ++v) {
        LpConstraint c;
        c.coeffs.assign(ne, Rat(0));
        bool incident = false;
        for (std::size_t e = 0; e < ne; ++e)
            if (std::find(H.edges[e].begin(), H.edges[e].end(), v) != H.edges[e].end()) {
                c.coeffs[e] = 1;
                incident = true;
            }
        if (!incident) continue;
        c.rel = Rel::Le;
        c.rhs = 1;
        cons.push_back(std::move(c));
    }
    LpResult r = lp_max(std::vector<Rat>(ne, Rat(1)), cons);
    if (r.status != LpStatus::Feasible)
        throw Error("fractional_matching_number: LP unexpectedly unsolvable");
    return {r.objective, *r.solution};
}

std::optional<std::vector<Rat>> perfect_fractional_matching(const Hypergraph& H) {
    H.validate();
    const std::size_t ne = H.edges.size();
    std::vector<LpConstraint> cons;
    for (int v = 0; v < H.n_vertices; ++v) {
        LpConstraint c;
        c.coeffs.assign(ne, Rat(0));
        for (std::size_t e = 0; e < ne; ++e)
            if (std::find(H.edges[e].begin(), H.edges[e].end(), v) != H.edges[e].end())
                c.coeffs[e] = 1;
        c.rel = Rel::Eq;
        c.rhs = 1;
        cons.push_back(std::move(c));
    }
    LpResult r = lp_max(std::vector<Rat>(ne, Rat(0)), cons);
    if (r.status != LpStatus::Feasible) return std::nullopt;
    return r.solution;
}

Rat furedi_matching_bound(const Hypergraph& H, int d) {
    H.validate();
    if (d < 2) throw Error("furedi_matching_bound: rank parameter must be >= 2");
    if (H.rank() > d) throw Error("furedi_matching_bound: rank exceeds d");
    Rat nustar = fractional_matching_number(H).first;
    if (H.parts) return nustar / Rat(d - 1);
    return nustar / (Rat(d - 1) + Rat(1, d));
}

Rat rank_lower_bound_nustar(const Hypergraph& H, int d) {
    if (H.rank() > d) throw Error("rank_lower_bound_nustar: rank exceeds d");
    if (!perfect_fractional_matching(H))
        throw Error("rank_lower_bound_nustar: no perfect fractional matching");
    return Rat(H.n_vertices) / Rat(d);
}

}  // namespace kkm
