#include "kkm/bad_edge.hpp"

#include "kkm/linprog.hpp"

#include <algorithm>
#include <set>

namespace kkm {

std::pair<int, FaceId> choose_label(const RatPoint& v, FaceId supp, std::vector<int> allowed,
                                    const CoverOracle& O, const PolytopeModel& P) {
    std::sort(allowed.begin(), allowed.end());
    const auto& faces = P.faces_within(supp);
    for (int i : allowed)
        for (FaceId tau : faces)
            if (O.query(i, tau, v)) return {i, tau};

    const int n = O.colors();
    const int k = P.simplex_order();
    std::size_t take = std::min(allowed.size(), static_cast<std::size_t>(std::max(1, n - k + 1)));
    ViolationCertificate cert;
    cert.x = v;
    cert.colors.assign(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(take));
    cert.sigma = supp;
    throw CoverViolation("choose_label: no admissible (color, face) pair; the family is not a "
                         "k-weakly Komiya cover",
                         std::move(cert));
}

namespace {

void label_vertex(Labeling& L, int v, const RatPoint& coords, const std::vector<int>& allowed,
                  const CoverOracle& O, const PolytopeModel& P, const AnchorTable& anchors) {
    std::size_t idx = static_cast<std::size_t>(v);
    if (L.lambda.size() <= idx) {
        L.lambda.resize(idx + 1, kWholePolytope);
        L.f.resize(idx + 1, -1);
        L.y.resize(idx + 1);
        L.supp.resize(idx + 1, kWholePolytope);
    }
    L.supp[idx] = P.support(coords);
    auto [color, tau] = choose_label(coords, L.supp[idx], allowed, O, P);
    L.lambda[idx] = tau;
    L.f[idx] = color;
    L.y[idx] = anchors.at(color, tau);
}

std::vector<int> all_colors(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

std::vector<int> colors_minus(int n, const std::set<int>& excluded) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
        if (!excluded.count(i)) v.push_back(i);
    return v;
}

// Claim check: each maximal simplex containing b(v_1,...,v_j) contains v_1
// or v_2, and for every 3 <= i <= j either v_i or b(v_1,...,v_{i-1}).
void check_simplex_shape(const Triangulation& T, const std::vector<int>& gen,
                         const std::vector<int>& bary, int j) {
    for (int ci : T.cells_at(bary[static_cast<std::size_t>(j)])) {
        const auto& cell = T.maximal()[static_cast<std::size_t>(ci)];
        auto has = [&](int v) { return std::find(cell.begin(), cell.end(), v) != cell.end(); };
        if (!has(gen[1]) && !has(gen[2]))
            throw Error("claim violated: simplex at b(v_1,...,v_j) misses both v_1 and v_2");
        for (int i = 3; i <= j; ++i)
            if (!has(gen[static_cast<std::size_t>(i)]) && !has(bary[static_cast<std::size_t>(i - 1)]))
                throw Error("claim violated: simplex at b(v_1,...,v_j) misses v_i and b(v_1,...,v_{i-1})");
    }
}

}  // namespace

Labeling initial_labeling(const Triangulation& T, const CoverOracle& O, const PolytopeModel& P,
                          const AnchorTable& anchors) {
    Labeling L;
    auto colors = all_colors(O.colors());
    for (std::size_t v = 0; v < T.verts().size(); ++v)
        label_vertex(L, static_cast<int>(v), T.verts()[v], colors, O, P, anchors);
    return L;
}

void eliminate_bad_edge(Triangulation& T, Labeling& L, std::pair<int, int> edge,
                        const CoverOracle& O, const PolytopeModel& P, const AnchorTable& anchors,
                        const EliminationOptions& opts) {
    const int v1 = edge.first, v2 = edge.second;
    if (!T.has_edge(v1, v2) || L.f.at(static_cast<std::size_t>(v1)) != L.f.at(static_cast<std::size_t>(v2)))
        throw Error("eliminate_bad_edge: edge is not a bad edge");

    const int n = O.colors();
    const int k = P.simplex_order();
    const auto original_bad = opts.check_claims ? bad_edges(T, L.f) : std::set<std::pair<int, int>>{};

    // gen[i] = v_i (1-based); bary[i] = id of b(v_1,...,v_i) for i >= 2.
    std::vector<int> gen(static_cast<std::size_t>(k + 2), -1);
    std::vector<int> bary(static_cast<std::size_t>(k + 2), -1);
    gen[1] = v1;
    gen[2] = v2;

    // Q[j] holds vertices u with u*b(v_1,...,v_{j+1}) currently a bad edge.
    std::vector<std::set<int>> Q(static_cast<std::size_t>(k + 2));

    // Setup: split v_1v_2 and label the midpoint away from f(v_2).
    {
        int w = T.subdivide(v1, v2);
        bary[2] = w;
        label_vertex(L, w, T.vert(w), colors_minus(n, {L.f[static_cast<std::size_t>(v2)]}), O, P,
                     anchors);
        for (int u : bad_neighbors(T, L.f, w)) Q[1].insert(u);
        if (opts.trace)
            opts.trace->push_back({0, 0, v2, w, T.vert(w), L.f[static_cast<std::size_t>(w)],
                                   L.lambda[static_cast<std::size_t>(w)]});
    }

    long iter = 0;
    for (;;) {
        int j = 0;
        for (int idx = k + 1; idx >= 1; --idx)
            if (!Q[static_cast<std::size_t>(idx)].empty()) {
                j = idx;
                break;
            }
        if (j == 0) break;
        if (j > k - 2) throw Error("claim violated: Q_j nonempty for j >= k-1");
        if (++iter > opts.iteration_cap) throw Error("eliminate_bad_edge: iteration cap exceeded");

        // Step (2): smallest queued vertex, deterministic.
        int v = *Q[static_cast<std::size_t>(j)].begin();
        Q[static_cast<std::size_t>(j)].erase(v);
        gen[static_cast<std::size_t>(j + 2)] = v;
        int w = T.subdivide(bary[static_cast<std::size_t>(j + 1)], v);
        bary[static_cast<std::size_t>(j + 2)] = w;

        // Step (3): label away from f(v_2),...,f(v_{j+2}).
        std::set<int> excluded;
        for (int i = 2; i <= j + 2; ++i)
            excluded.insert(L.f[static_cast<std::size_t>(gen[static_cast<std::size_t>(i)])]);
        label_vertex(L, w, T.vert(w), colors_minus(n, excluded), O, P, anchors);

        // Step (4).
        Q[static_cast<std::size_t>(j + 1)].clear();
        for (int u : bad_neighbors(T, L.f, w)) Q[static_cast<std::size_t>(j + 1)].insert(u);

        if (opts.trace)
            opts.trace->push_back({static_cast<int>(iter), j, v, w, T.vert(w),
                                   L.f[static_cast<std::size_t>(w)],
                                   L.lambda[static_cast<std::size_t>(w)]});

        if (opts.check_claims) {
            for (int i = 2; i <= j + 2; ++i)
                check_simplex_shape(T, gen, bary, i);
            // Every bad edge not bad originally must be queued against the
            // right barycenter.
            auto now_bad = bad_edges(T, L.f);
            for (const auto& e : now_bad) {
                if (original_bad.count(e)) continue;
                bool accounted = false;
                for (int idx = 1; idx <= k; ++idx) {
                    int b = bary[static_cast<std::size_t>(idx + 1)];
                    if (b < 0) continue;
                    int other = (e.first == b) ? e.second : (e.second == b ? e.first : -1);
                    if (other >= 0 && Q[static_cast<std::size_t>(idx)].count(other)) accounted = true;
                }
                if (!accounted)
                    throw Error("claim violated: stray bad edge outside the queue bookkeeping");
            }
        }
    }

    if (T.has_edge(v1, v2)) throw Error("eliminate_bad_edge: edge survived");
}

std::pair<Triangulation, Labeling> eliminate_bad_edge(const Triangulation& T, const Labeling& L,
                                                      std::pair<int, int> edge,
                                                      const CoverOracle& O,
                                                      const PolytopeModel& P,
                                                      const AnchorTable& anchors,
                                                      const EliminationOptions& opts) {
    Triangulation T2 = T;
    Labeling L2 = L;
    eliminate_bad_edge(T2, L2, edge, O, P, anchors, opts);
    return {std::move(T2), std::move(L2)};
}

std::pair<Triangulation, Labeling> make_good(const Triangulation& T, const CoverOracle& O,
                                             const PolytopeModel& P, const AnchorTable& anchors,
                                             const EliminationOptions& opts) {
    Triangulation Tc = T;
    Labeling L = initial_labeling(Tc, O, P, anchors);
    auto bad = bad_edges(Tc, L.f);
    while (!bad.empty()) {
        auto e = *bad.begin();  // lexicographically smallest
        eliminate_bad_edge(Tc, L, e, O, P, anchors, opts);
        // Old vertices keep their colors and the cascade only subdivides the
        // chosen edge plus barycenter-incident edges, so the bad set shrinks
        // by exactly the eliminated edge.
        bad.erase(e);
        if (opts.check_claims && bad != bad_edges(Tc, L.f))
            throw Error("make_good: incremental bad-edge set out of sync");
    }
    return {std::move(Tc), std::move(L)};
}

void verify_labeling(const Triangulation& T, const Labeling& L, const CoverOracle& O,
                     const PolytopeModel& P, const AnchorTable& anchors, bool require_p3) {
    for (std::size_t v = 0; v < T.verts().size(); ++v) {
        FaceId tau = L.lambda[v];
        int color = L.f[v];
        if (!O.query(color, tau, T.verts()[v])) throw Error("P1 violated at vertex " + std::to_string(v));
        // lambda(v) <= supp(v)
        FaceId supp = P.support(T.verts()[v]);
        if (supp != kWholePolytope) {
            const auto& sub = P.faces_within(supp);
            if (std::find(sub.begin(), sub.end(), tau) == sub.end())
                throw Error("P2 violated: lambda(v) not within supp(v) at vertex " + std::to_string(v));
        }
        // y(v) in lambda(v), and equal to the anchor.
        if (L.y[v] != anchors.at(color, tau)) throw Error("P2 violated: y(v) is not the anchor");
        std::vector<RatPoint> gens;
        for (int id : P.face(tau).vertex_ids) gens.push_back(P.vertex(id));
        if (!in_convex_hull(L.y[v], gens))
            throw Error("P2 violated: y(v) outside lambda(v) at vertex " + std::to_string(v));
    }
    if (require_p3) {
        for (const auto& cell : T.maximal()) {
            std::set<int> colors;
            for (int v : cell) colors.insert(L.f[static_cast<std::size_t>(v)]);
            if (colors.size() != cell.size()) throw Error("P3 violated in a maximal simplex");
        }
    }
}

}  // namespace kkm
