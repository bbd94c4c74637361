#include "kkm/d_interval.hpp"

#include "kkm/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kkm {

void PiercingInstance::validate() const {
    if (d < 1) throw Error("piercing instance: d must be >= 1");
    if (variant == PiercingVariant::General) {
        if (k < 1) throw Error("piercing instance: k must be >= 1");
    } else {
        if (m < 1) throw Error("piercing instance: m must be >= 1");
    }
    if (families.empty()) throw Error("piercing instance: no families");
    for (const auto& fam : families)
        for (const auto& f : fam) {
            if (static_cast<int>(f.comps.size()) != d)
                throw Error("piercing instance: member with wrong component count");
            for (const auto& [a, b] : f.comps)
                if (a > b) throw Error("piercing instance: reversed interval");
        }
}

std::vector<Rat> prefix_points(const RatPoint& x) {
    Rat sum = 0;
    std::vector<Rat> p;
    for (std::size_t j = 0; j < x.dim(); ++j) {
        if (x[j] < 0) throw Error("prefix_points: negative coordinate");
        sum += x[j];
        p.push_back(sum);
    }
    if (sum != 1) throw Error("prefix_points: coordinates do not sum to 1");
    return p;
}

namespace {

// p_x(0..k) including the leading zero, no simplex validation (solver-hot).
std::vector<Rat> prefix_from(const RatPoint& x, std::size_t begin, std::size_t count) {
    std::vector<Rat> p(count + 1);
    p[0] = 0;
    for (std::size_t j = 0; j < count; ++j) p[j + 1] = p[j] + x[begin + j];
    return p;
}

std::pair<Rat, Rat> endpoint_range(const std::vector<std::vector<DInterval>>& families, int comp) {
    bool any = false;
    Rat lo = 0, hi = 0;
    for (const auto& fam : families)
        for (const auto& f : fam) {
            const auto& [a, b] = f.comps[static_cast<std::size_t>(comp)];
            if (!any || a < lo) lo = a;
            if (!any || b > hi) hi = b;
            any = true;
        }
    return {lo, hi};
}

bool comp_in_window(const std::pair<Rat, Rat>& c, const Rat& lo, const Rat& hi) {
    return c.first > lo && c.second < hi;
}

void require_canonical(const PiercingInstance& inst) {
    for (const auto& fam : inst.families)
        for (const auto& f : fam)
            for (std::size_t t = 0; t < f.comps.size(); ++t) {
                Rat lo = inst.variant == PiercingVariant::Separated ? Rat(static_cast<long>(t))
                                                                    : Rat(0);
                Rat hi = lo + 1;
                if (inst.variant == PiercingVariant::General) hi = 1;
                if (!comp_in_window(f.comps[t], lo, hi))
                    throw Error("cover oracle: instance not in canonical coordinates; "
                                "run normalize first");
            }
}

}  // namespace

PiercingInstance normalize(const PiercingInstance& inst) {
    inst.validate();
    PiercingInstance out = inst;
    if (inst.variant == PiercingVariant::General) {
        bool ok = true;
        for (const auto& fam : inst.families)
            for (const auto& f : fam)
                for (const auto& c : f.comps) ok = ok && comp_in_window(c, Rat(0), Rat(1));
        if (ok) return out;
        auto [lo, hi] = endpoint_range(inst.families, 0);
        for (int t = 1; t < inst.d; ++t) {
            auto [a, b] = endpoint_range(inst.families, t);
            if (a < lo) lo = a;
            if (b > hi) hi = b;
        }
        lo -= 1;
        hi += 1;
        Rat scale = Rat(1) / (hi - lo);
        for (auto& fam : out.families)
            for (auto& f : fam)
                for (auto& c : f.comps) c = {(c.first - lo) * scale, (c.second - lo) * scale};
        return out;
    }
    // Separated: cake t's coordinates live in (t, t+1); rescale each cake
    // independently, and only when its data falls outside the window.
    for (int t = 0; t < inst.d; ++t) {
        Rat win_lo(static_cast<long>(t));
        Rat win_hi = win_lo + 1;
        bool ok = true;
        for (const auto& fam : inst.families)
            for (const auto& f : fam)
                ok = ok && comp_in_window(f.comps[static_cast<std::size_t>(t)], win_lo, win_hi);
        if (ok) continue;
        auto [lo, hi] = endpoint_range(inst.families, t);
        lo -= 1;
        hi += 1;
        Rat scale = Rat(1) / (hi - lo);
        for (auto& fam : out.families)
            for (auto& f : fam) {
                auto& c = f.comps[static_cast<std::size_t>(t)];
                c = {win_lo + (c.first - lo) * scale, win_lo + (c.second - lo) * scale};
            }
    }
    return out;
}

namespace {

bool point_hits(const Rat& x, const DInterval& f) {
    for (const auto& [a, b] : f.comps)
        if (a <= x && x <= b) return true;
    return false;
}

// Smallest piercing set of size <= cap, or nullopt. A minimum piercing set
// can always be slid onto right endpoints, so those are the only candidates.
std::optional<std::vector<Rat>> smallest_piercing_set(const std::vector<DInterval>& edges,
                                                      int cap) {
    if (edges.empty()) return std::vector<Rat>{};
    std::set<Rat> cand_set;
    for (const auto& f : edges)
        for (const auto& [a, b] : f.comps) cand_set.insert(b);
    std::vector<Rat> cand(cand_set.begin(), cand_set.end());
    const int nc = static_cast<int>(cand.size());
    for (int r = 1; r <= std::min(cap, nc); ++r) {
        for (const auto& pick : subsets_of_size(nc, r)) {
            bool covers = true;
            for (const auto& f : edges) {
                bool hit = false;
                for (int c : pick)
                    if (point_hits(cand[static_cast<std::size_t>(c)], f)) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    covers = false;
                    break;
                }
            }
            if (covers) {
                std::vector<Rat> out;
                for (int c : pick) out.push_back(cand[static_cast<std::size_t>(c)]);
                return out;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

int interval_piercing_number(const std::vector<DInterval>& edges, int cap) {
    if (auto s = smallest_piercing_set(edges, cap)) return static_cast<int>(s->size());
    return cap + 1;
}

std::optional<std::pair<std::vector<int>, std::vector<Rat>>> find_hypothesis_failure(
    const PiercingInstance& inst) {
    inst.validate();
    const int n = inst.colors();
    const int k =
        inst.variant == PiercingVariant::General ? inst.k : inst.d * (inst.m - 1) + 1;
    if (n < k) throw Error("piercing hypothesis: fewer families than k");
    for (const auto& I : subsets_of_size(n, n - k + 1)) {
        std::vector<DInterval> uni;
        for (int i : I) {
            const auto& fam = inst.families[static_cast<std::size_t>(i)];
            uni.insert(uni.end(), fam.begin(), fam.end());
        }
        if (auto s = smallest_piercing_set(uni, k - 1)) return std::make_pair(I, *s);
    }
    return std::nullopt;
}

bool witnesses_general(const DInterval& f, const std::vector<int>& T,
                       const std::vector<Rat>& prefix) {
    std::set<int> required(T.begin(), T.end());
    std::set<int> hit;
    for (const auto& [a, b] : f.comps) {
        int cell = -1;
        for (std::size_t j = 0; j + 1 < prefix.size(); ++j)
            if (prefix[j] < a && b < prefix[j + 1]) {
                cell = static_cast<int>(j);
                break;
            }
        if (cell < 0 || !required.count(cell)) return false;  // (a)
        hit.insert(cell);
    }
    return hit == required;  // (b)
}

bool witnesses_separated(const DInterval& f, const std::vector<int>& T, const RatPoint& x, int m,
                         int d) {
    for (int t = 0; t < d; ++t) {
        auto p = prefix_from(x, static_cast<std::size_t>(t * m), static_cast<std::size_t>(m));
        const auto& [a, b] = f.comps[static_cast<std::size_t>(t)];
        const int j = T[static_cast<std::size_t>(t)];
        Rat shift(static_cast<long>(t));
        if (!(shift + p[static_cast<std::size_t>(j)] < a &&
              b < shift + p[static_cast<std::size_t>(j) + 1]))
            return false;
    }
    return true;
}

bool dintervals_disjoint(const DInterval& a, const DInterval& b) {
    for (const auto& [a1, b1] : a.comps)
        for (const auto& [a2, b2] : b.comps)
            if (a1 <= b2 && a2 <= b1) return false;
    return true;
}

std::unique_ptr<CoverOracle> interval_cover_oracle(const PiercingInstance& inst,
                                                   const PolytopeModel& P) {
    inst.validate();
    if (inst.variant != PiercingVariant::General)
        throw Error("interval_cover_oracle: general variant only");
    require_canonical(inst);
    if (P.kind() != PolytopeModel::Kind::Simplex || P.simplex_order() != inst.k)
        throw Error("interval_cover_oracle: polytope must be the order-k simplex");
    auto families = inst.families;
    const int d = inst.d;
    return std::make_unique<FunctionCover>(
        inst.colors(),
        [families, d, &P](int color, FaceId tau, const RatPoint& x) {
            const auto& T = P.face(tau).vertex_ids;
            if (static_cast<int>(T.size()) > d) return false;
            auto prefix = prefix_from(x, 0, x.dim());
            for (const auto& f : families[static_cast<std::size_t>(color)])
                if (witnesses_general(f, T, prefix)) return true;
            return false;
        },
        /*open=*/true);
}

std::unique_ptr<CoverOracle> separated_cover_oracle(const PiercingInstance& inst,
                                                    const PolytopeModel& P) {
    inst.validate();
    if (inst.variant != PiercingVariant::Separated)
        throw Error("separated_cover_oracle: separated variant only");
    require_canonical(inst);
    if (P.kind() != PolytopeModel::Kind::SimplexProduct || P.product_m() != inst.m ||
        P.product_d() != inst.d)
        throw Error("separated_cover_oracle: polytope must be (Delta^{m-1})^d");
    auto families = inst.families;
    const int m = inst.m, d = inst.d;
    return std::make_unique<FunctionCover>(
        inst.colors(),
        [families, m, d, &P](int color, FaceId tau, const RatPoint& x) {
            const auto& rec = P.face(tau);
            if (rec.dim != 0) return false;  // only vertex faces carry sets
            auto T = P.tuple_of_vertex(rec.vertex_ids[0]);
            for (const auto& f : families[static_cast<std::size_t>(color)])
                if (witnesses_separated(f, T, x, m, d)) return true;
            return false;
        },
        /*open=*/true);
}

Rat default_eps(const PiercingInstance& normalized) {
    std::set<Rat> vals;
    if (normalized.variant == PiercingVariant::General) {
        vals.insert(Rat(0));
        vals.insert(Rat(1));
    } else {
        for (int t = 0; t <= normalized.d; ++t) vals.insert(Rat(static_cast<long>(t)));
    }
    for (const auto& fam : normalized.families)
        for (const auto& f : fam)
            for (const auto& [a, b] : f.comps) {
                vals.insert(a);
                vals.insert(b);
            }
    Rat gap = 1;
    bool any = false;
    for (auto it = vals.begin(); std::next(it) != vals.end(); ++it) {
        Rat g = *std::next(it) - *it;
        if (g > 0 && (!any || g < gap)) {
            gap = g;
            any = true;
        }
    }
    return gap / 64;
}

int guaranteed_matching_size(const PiercingInstance& inst) {
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    if (inst.variant == PiercingVariant::General)
        return ceil_div(inst.k, inst.d * inst.d - inst.d + 1);
    if (inst.d == 1) return inst.m;
    return ceil_div(inst.m, inst.d - 1);
}

ColorfulMatching pierce(const PiercingInstance& inst, const PierceOptions& opts) {
    inst.validate();
    const bool sep = inst.variant == PiercingVariant::Separated;
    if (sep && inst.d == 1) {
        // A separated 1-interval instance is the general case with k = m.
        PiercingInstance gen = inst;
        gen.variant = PiercingVariant::General;
        gen.k = inst.m;
        return pierce(gen, opts);
    }
    const int n = inst.colors();
    const int m = inst.m, d = inst.d;
    const int k = sep ? d * (m - 1) + 1 : inst.k;
    if (n < k) throw Error("pierce: need at least k families");

    if (!opts.skip_hypothesis_check) {
        if (n > opts.hypothesis_cap_n)
            throw Error("pierce: hypothesis check is exponential in n; pass "
                        "skip_hypothesis_check for n > cap");
        if (auto fail = find_hypothesis_failure(inst)) {
            std::ostringstream msg;
            msg << "pierce: covering-number hypothesis fails for families {";
            for (std::size_t i = 0; i < fail->first.size(); ++i)
                msg << (i ? "," : "") << fail->first[i];
            msg << "}: their union is pierced by " << fail->second.size() << " points";
            throw HypothesisViolation(msg.str(), fail->first, fail->second);
        }
    }

    PiercingInstance norm = normalize(inst);
    PolytopeModel P =
        sep ? PolytopeModel::simplex_product(m, d) : PolytopeModel::simplex(k);
    auto O = sep ? separated_cover_oracle(norm, P) : interval_cover_oracle(norm, P);
    AnchorTable anchors = default_anchors(P, n);
    Rat eps = opts.eps ? *opts.eps : default_eps(norm);

    ColorfulMatching out;
    out.certificate = solve(P, *O, anchors, eps, opts.solve);
    const SolveCertificate& cert = out.certificate;

    // The certified faces, as piece sets (general) or piece tuples (separated).
    std::vector<std::vector<int>> T(static_cast<std::size_t>(k));
    Hypergraph H;
    H.n_vertices = sep ? m * d : k;
    if (sep) {
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(d));
        for (int t = 0; t < d; ++t)
            for (int j = 0; j < m; ++j) parts[static_cast<std::size_t>(t)].push_back(t * m + j);
        H.parts = parts;
    }
    for (int i = 0; i < k; ++i) {
        const auto& rec = P.face(cert.tau[static_cast<std::size_t>(i)]);
        if (sep) {
            if (rec.dim != 0) throw Error("pierce: non-vertex face in a separated certificate");
            T[static_cast<std::size_t>(i)] = P.tuple_of_vertex(rec.vertex_ids[0]);
            std::vector<int> edge;
            for (int t = 0; t < d; ++t) edge.push_back(t * m + T[static_cast<std::size_t>(i)][t]);
            H.edges.push_back(edge);
        } else {
            T[static_cast<std::size_t>(i)] = rec.vertex_ids;
            if (static_cast<int>(rec.vertex_ids.size()) > d)
                throw Error("pierce: certified face uses more than d pieces");
            H.edges.push_back(rec.vertex_ids);
        }
    }

    // The hull coefficients encode a perfect fractional matching of H:
    // scale each by k/|T_i| (general, barycentric anchors) or m (separated,
    // vertex anchors) and the per-vertex sums must be exactly 1.
    for (int v = 0; v < H.n_vertices; ++v) {
        Rat sum = 0;
        for (int i = 0; i < k; ++i) {
            const auto& e = H.edges[static_cast<std::size_t>(i)];
            if (std::find(e.begin(), e.end(), v) == e.end()) continue;
            const Rat& c = cert.coeffs[static_cast<std::size_t>(i)];
            sum += sep ? Rat(Rat(m) * c) : Rat(Rat(k) * c / Rat(static_cast<long>(e.size())));
        }
        if (sum != 1) throw Error("pierce: hull coefficients are not a perfect "
                                  "fractional matching");
    }

    const auto& fams = norm.families;
    for (int i : maximum_matching(H)) {
        const int color = cert.pi[static_cast<std::size_t>(i)];
        const RatPoint& x = cert.witness[static_cast<std::size_t>(i)];
        int member = -1;
        const auto& fam = fams[static_cast<std::size_t>(color)];
        for (std::size_t j = 0; j < fam.size(); ++j) {
            bool ok = sep ? witnesses_separated(fam[j], T[static_cast<std::size_t>(i)], x, m, d)
                          : witnesses_general(fam[j], T[static_cast<std::size_t>(i)],
                                              prefix_from(x, 0, x.dim()));
            if (ok) {
                member = static_cast<int>(j);
                break;
            }
        }
        if (member < 0)
            throw Error("pierce: witness vertex carries no witnessing interval");
        out.members.emplace_back(color, member);
    }

    // Output validation: colorful, pairwise disjoint, large enough.
    std::set<int> colors_used;
    for (const auto& [c, j] : out.members)
        if (!colors_used.insert(c).second) throw Error("pierce: repeated family in matching");
    for (std::size_t a = 0; a < out.members.size(); ++a)
        for (std::size_t b = a + 1; b < out.members.size(); ++b) {
            const auto& fa = fams[static_cast<std::size_t>(out.members[a].first)]
                                 [static_cast<std::size_t>(out.members[a].second)];
            const auto& fb = fams[static_cast<std::size_t>(out.members[b].first)]
                                 [static_cast<std::size_t>(out.members[b].second)];
            if (!dintervals_disjoint(fa, fb))
                throw Error("pierce: matching members intersect");
        }
    if (static_cast<int>(out.members.size()) < guaranteed_matching_size(inst))
        throw Error("pierce: matching smaller than the guaranteed bound");
    return out;
}

}  // namespace kkm
