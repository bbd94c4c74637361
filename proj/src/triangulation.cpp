#include "kkm/triangulation.hpp"

#include <algorithm>
#include <queue>

namespace kkm {

Triangulation::Triangulation(std::vector<RatPoint> verts, std::vector<std::vector<int>> cells)
    : verts_(std::move(verts)), cells_(std::move(cells)) {
    if (cells_.empty()) throw Error("triangulation: no maximal simplices");
    order_ = static_cast<int>(cells_[0].size());
    vert_cells_.assign(verts_.size(), {});
    tags_.assign(verts_.size(), {});
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        auto& c = cells_[i];
        std::sort(c.begin(), c.end());
        if (static_cast<int>(c.size()) != order_ ||
            std::adjacent_find(c.begin(), c.end()) != c.end())
            throw Error("triangulation: not pure (cell " + std::to_string(i) + ")");
        index_cell(i);
    }
}

void Triangulation::index_cell(std::size_t idx) {
    for (int v : cells_[idx]) vert_cells_.at(static_cast<std::size_t>(v)).insert(static_cast<int>(idx));
}

bool Triangulation::has_edge(int a, int b) const {
    if (a == b) return false;
    const auto& ca = vert_cells_.at(static_cast<std::size_t>(a));
    const auto& cb = vert_cells_.at(static_cast<std::size_t>(b));
    const auto& small = ca.size() <= cb.size() ? ca : cb;
    const auto& big = ca.size() <= cb.size() ? cb : ca;
    for (int c : small)
        if (big.count(c)) return true;
    return false;
}

std::set<std::pair<int, int>> Triangulation::edges() const {
    std::set<std::pair<int, int>> out;
    for (const auto& c : cells_)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) out.emplace(c[i], c[j]);
    return out;
}

std::vector<int> Triangulation::neighbors(int v) const {
    std::set<int> out;
    for (int ci : vert_cells_.at(static_cast<std::size_t>(v)))
        for (int u : cells_[static_cast<std::size_t>(ci)])
            if (u != v) out.insert(u);
    return {out.begin(), out.end()};
}

int Triangulation::subdivide(int v1, int v2) {
    if (!has_edge(v1, v2)) throw Error("subdivide: not an edge");
    const int w = static_cast<int>(verts_.size());
    verts_.push_back(midpoint(verts_[static_cast<std::size_t>(v1)], verts_[static_cast<std::size_t>(v2)]));
    vert_cells_.emplace_back();
    tags_.push_back({v1, v2});

    std::vector<int> affected;
    for (int ci : vert_cells_[static_cast<std::size_t>(v1)])
        if (vert_cells_[static_cast<std::size_t>(v2)].count(ci)) affected.push_back(ci);
    std::sort(affected.begin(), affected.end());

    for (int ci : affected) {
        std::vector<int> cell = cells_[static_cast<std::size_t>(ci)];
        std::vector<int> half1 = cell, half2 = cell;  // v1 replaced / v2 replaced
        *std::find(half1.begin(), half1.end(), v1) = w;
        *std::find(half2.begin(), half2.end(), v2) = w;
        std::sort(half1.begin(), half1.end());
        std::sort(half2.begin(), half2.end());
        for (int v : cell) vert_cells_[static_cast<std::size_t>(v)].erase(ci);
        cells_[static_cast<std::size_t>(ci)] = std::move(half1);
        index_cell(static_cast<std::size_t>(ci));
        cells_.push_back(std::move(half2));
        index_cell(cells_.size() - 1);
    }
    return w;
}

Rat Triangulation::max_edge_length_sq() const {
    Rat best = 0;
    for (const auto& e : edges()) {
        Rat l = dist_sq(verts_[static_cast<std::size_t>(e.first)],
                        verts_[static_cast<std::size_t>(e.second)]);
        if (l > best) best = l;
    }
    return best;
}

namespace {

void staircase_paths(int m, int d, std::vector<int>& pos, std::vector<int>& path,
                     const PolytopeModel& P, std::vector<std::vector<int>>& out) {
    bool done = true;
    for (int t = 0; t < d; ++t)
        if (pos[static_cast<std::size_t>(t)] != m - 1) done = false;
    if (done) {
        out.push_back(path);
        return;
    }
    for (int t = 0; t < d; ++t) {
        if (pos[static_cast<std::size_t>(t)] == m - 1) continue;
        ++pos[static_cast<std::size_t>(t)];
        path.push_back(P.vertex_by_tuple(pos));
        staircase_paths(m, d, pos, path, P, out);
        path.pop_back();
        --pos[static_cast<std::size_t>(t)];
    }
}

}  // namespace

Triangulation initial_triangulation(const PolytopeModel& P) {
    if (P.kind() == PolytopeModel::Kind::Simplex) {
        std::vector<int> cell(P.vertex_count());
        for (std::size_t i = 0; i < cell.size(); ++i) cell[i] = static_cast<int>(i);
        return Triangulation(P.vertices(), {cell});
    }
    if (P.kind() == PolytopeModel::Kind::SimplexProduct) {
        // Staircase (shuffle) triangulation: one maximal cell per monotone
        // lattice path from (1,...,1) to (m,...,m) in [m]^d.
        int m = P.product_m(), d = P.product_d();
        std::vector<int> pos(static_cast<std::size_t>(d), 0);
        std::vector<int> path = {P.vertex_by_tuple(pos)};
        std::vector<std::vector<int>> cells;
        staircase_paths(m, d, pos, path, P, cells);
        return Triangulation(P.vertices(), std::move(cells));
    }
    throw Error("initial_triangulation: explicit polytopes need a user-supplied triangulation");
}

Triangulation initial_triangulation(const PolytopeModel& P, std::vector<RatPoint> verts,
                                    std::vector<std::vector<int>> cells) {
    Triangulation T(std::move(verts), std::move(cells));
    if (T.order() != P.simplex_order())
        throw Error("initial_triangulation: cells do not match dim(P)+1");
    for (std::size_t i = 0; i < T.verts().size(); ++i)
        if (!P.contains(T.verts()[i]))
            throw Error("initial_triangulation: vertex " + std::to_string(i) + " not in P");
    for (std::size_t ci = 0; ci < T.maximal().size(); ++ci) {
        std::vector<RatPoint> pts;
        for (int v : T.maximal()[ci]) pts.push_back(T.vert(v));
        if (affine_rank(pts) != P.dim())
            throw Error("initial_triangulation: degenerate cell " + std::to_string(ci));
    }
    return T;
}

Triangulation subdivide_edge(const Triangulation& T, int v1, int v2) {
    Triangulation out = T;
    out.subdivide(v1, v2);
    return out;
}

Triangulation refine_to_diameter(const Triangulation& T, const Rat& eps, long iteration_cap) {
    if (eps <= 0) throw Error("refine_to_diameter: eps must be positive");
    Triangulation out = T;
    const Rat eps_sq = eps * eps;

    struct Entry {
        Rat len_sq;
        std::pair<int, int> e;
    };
    auto later = [](const Entry& a, const Entry& b) {
        if (a.len_sq != b.len_sq) return a.len_sq < b.len_sq;  // longest first
        return a.e > b.e;                                      // then lex smallest pair
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> heap(later);
    for (const auto& e : out.edges())
        heap.push({dist_sq(out.vert(e.first), out.vert(e.second)), e});

    long iters = 0;
    while (!heap.empty()) {
        Entry top = heap.top();
        heap.pop();
        if (!out.has_edge(top.e.first, top.e.second)) continue;  // stale
        if (top.len_sq <= eps_sq) break;
        if (++iters > iteration_cap)
            throw Error("refine_to_diameter: iteration cap exceeded");
        int w = out.subdivide(top.e.first, top.e.second);
        std::set<int> nbrs;
        for (int ci : out.cells_at(w))
            for (int u : out.maximal()[static_cast<std::size_t>(ci)])
                if (u != w) nbrs.insert(u);
        for (int u : nbrs) {
            std::pair<int, int> e{std::min(u, w), std::max(u, w)};
            heap.push({dist_sq(out.vert(u), out.vert(w)), e});
        }
    }
    return out;
}

std::set<std::pair<int, int>> bad_edges(const Triangulation& T, const std::vector<int>& f) {
    std::set<std::pair<int, int>> out;
    for (const auto& e : T.edges())
        if (f.at(static_cast<std::size_t>(e.first)) == f.at(static_cast<std::size_t>(e.second)))
            out.insert(e);
    return out;
}

std::vector<int> bad_neighbors(const Triangulation& T, const std::vector<int>& f, int v) {
    std::vector<int> out;
    for (int u : T.neighbors(v))
        if (f.at(static_cast<std::size_t>(u)) == f.at(static_cast<std::size_t>(v))) out.push_back(u);
    return out;
}

Rat gram_det(const Triangulation& T, const std::vector<int>& cell) {
    if (cell.empty()) throw Error("gram_det: empty cell");
    const RatPoint& base = T.vert(cell[0]);
    std::vector<RatPoint> edges_from_base;
    for (std::size_t i = 1; i < cell.size(); ++i) edges_from_base.push_back(T.vert(cell[i]) - base);
    const std::size_t n = edges_from_base.size();
    std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat s = 0;
            for (std::size_t t = 0; t < edges_from_base[i].dim(); ++t)
                s += edges_from_base[i][t] * edges_from_base[j][t];
            g[i][j] = s;
        }
    // Determinant by fraction-free-ish Gaussian elimination over Rat.
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (g[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(g[piv], g[col]);
            det = -det;
        }
        det *= g[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (g[r][col] == 0) continue;
            Rat f = g[r][col] / g[col][col];
            for (std::size_t j = col; j < n; ++j) g[r][j] -= f * g[col][j];
        }
    }
    return det;
}

}  // namespace kkm
