#include "kkm/cake.hpp"

#include "kkm/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace kkm {

Partition::Partition(int m_, int d_, RatPoint coords) : m(m_), d(d_), x(std::move(coords)) {
    if (m < 1 || d < 1 || x.dim() != static_cast<std::size_t>(m * d))
        throw Error("partition: coordinate count must be m*d");
    for (int t = 0; t < d; ++t) {
        Rat sum = 0;
        for (int j = 0; j < m; ++j) {
            const Rat& c = x[static_cast<std::size_t>(t * m + j)];
            if (c < 0) throw Error("partition: negative piece length");
            sum += c;
        }
        if (sum != 1) throw Error("partition: piece lengths of a cake must sum to 1");
    }
}

Rat Partition::piece_length(int cake, int piece) const {
    return x[static_cast<std::size_t>(cake * m + piece)];
}

std::vector<Rat> Partition::cuts(int cake) const {
    std::vector<Rat> p;
    Rat sum = 0;
    for (int j = 0; j + 1 < m; ++j) {
        sum += piece_length(cake, j);
        p.push_back(sum);
    }
    return p;
}

std::pair<Rat, Rat> Partition::piece_interval(int cake, int piece) const {
    Rat lo = 0;
    for (int j = 0; j < piece; ++j) lo += piece_length(cake, j);
    return {lo, lo + piece_length(cake, piece)};
}

HungryMaxPlayer::HungryMaxPlayer(int m, int d, std::vector<std::vector<Segment>> densities)
    : m_(m), d_(d), densities_(std::move(densities)) {
    if (static_cast<int>(densities_.size()) != d_)
        throw Error("hungry player: one density list per cake required");
    for (const auto& cake : densities_)
        for (const auto& s : cake) {
            if (s.value < 0) throw Error("hungry player: negative density");
            if (s.from > s.to) throw Error("hungry player: reversed density segment");
        }
}

Rat HungryMaxPlayer::piece_measure(const Partition& x, int cake, int piece) const {
    auto [lo, hi] = x.piece_interval(cake, piece);
    Rat total = 0;
    for (const auto& s : densities_[static_cast<std::size_t>(cake)]) {
        Rat a = std::max(lo, s.from), b = std::min(hi, s.to);
        if (a < b) total += s.value * (b - a);
    }
    return total;
}

std::vector<int> HungryMaxPlayer::favorite_tuple(const Partition& x) const {
    // Total measure is separable across cakes, so the lexicographically
    // smallest maximizer picks each cake's best nonempty piece independently.
    std::vector<int> best;
    for (int t = 0; t < d_; ++t) {
        int arg = -1;
        Rat val = 0;
        for (int j = 0; j < m_; ++j) {
            if (x.piece_length(t, j) == 0) continue;
            Rat v = piece_measure(x, t, j);
            if (arg < 0 || v > val) {
                arg = j;
                val = v;
            }
        }
        best.push_back(arg);  // some piece is nonempty: lengths sum to 1
    }
    return best;
}

bool HungryMaxPlayer::prefers(const Partition& x, const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != d_) throw Error("hungry player: tuple arity");
    return tuple == favorite_tuple(x);
}

std::unique_ptr<CoverOracle> preference_cover_oracle(
    const std::vector<const PlayerOracle*>& players, const PolytopeModel& P) {
    if (P.kind() != PolytopeModel::Kind::SimplexProduct)
        throw Error("preference_cover_oracle: polytope must be (Delta^{m-1})^d");
    for (const auto* p : players)
        if (!p) throw Error("preference_cover_oracle: null player");
    const int m = P.product_m(), d = P.product_d();
    return std::make_unique<FunctionCover>(
        static_cast<int>(players.size()),
        [players, m, d, &P](int color, FaceId tau, const RatPoint& x) {
            const auto& rec = P.face(tau);
            if (rec.dim != 0) return false;  // only vertex faces carry sets
            auto T = P.tuple_of_vertex(rec.vertex_ids[0]);
            return players[static_cast<std::size_t>(color)]->prefers(Partition(m, d, x), T);
        });
}

int guaranteed_allocation_size(int m, int d) {
    if (d < 1 || m < 1) throw Error("allocation bound: m, d must be >= 1");
    if (d == 1) return m;
    return (m + d - 2) / (d - 1);
}

Allocation divide(const std::vector<const PlayerOracle*>& players, int m, int d, const Rat& eps,
                  const DivideOptions& opts) {
    const int n = static_cast<int>(players.size());
    const int k = d * (m - 1) + 1;
    if (n < k) throw Error("divide: need at least d(m-1)+1 players");
    if (eps <= 0) throw Error("divide: eps must be positive");

    PolytopeModel P = PolytopeModel::simplex_product(m, d);
    auto O = preference_cover_oracle(players, P);
    AnchorTable anchors = default_anchors(P, n);

    Rat cur_eps = eps;
    std::string last_failure;
    for (int round = 1; round <= opts.retry_cap + 1; ++round, cur_eps /= 2) {
        Allocation out;
        out.certificate = solve(P, *O, anchors, cur_eps, opts.solve);
        out.rounds = round;
        const SolveCertificate& cert = out.certificate;
        out.partition = Partition(m, d, cert.witness[0]);

        Hypergraph H;
        H.n_vertices = m * d;
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(d));
        for (int t = 0; t < d; ++t)
            for (int j = 0; j < m; ++j) parts[static_cast<std::size_t>(t)].push_back(t * m + j);
        H.parts = parts;
        std::vector<std::vector<int>> T(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const auto& rec = P.face(cert.tau[static_cast<std::size_t>(i)]);
            if (rec.dim != 0) throw Error("divide: non-vertex face in certificate");
            T[static_cast<std::size_t>(i)] = P.tuple_of_vertex(rec.vertex_ids[0]);
            std::vector<int> edge;
            for (int t = 0; t < d; ++t) edge.push_back(t * m + T[static_cast<std::size_t>(i)][t]);
            H.edges.push_back(edge);
        }

        // The hull coefficients, scaled by m, are a perfect fractional
        // matching of the tuple hypergraph (vertex anchors, p = barycenter).
        for (int v = 0; v < H.n_vertices; ++v) {
            Rat sum = 0;
            for (int i = 0; i < k; ++i)
                if (std::find(H.edges[static_cast<std::size_t>(i)].begin(),
                              H.edges[static_cast<std::size_t>(i)].end(),
                              v) != H.edges[static_cast<std::size_t>(i)].end())
                    sum += Rat(m) * cert.coeffs[static_cast<std::size_t>(i)];
            if (sum != 1)
                throw Error("divide: hull coefficients are not a perfect fractional matching");
        }

        // Re-verify every allocated preference at the single partition x; at
        // finite eps the witness vertices may disagree, so halve and retry.
        bool ok = true;
        for (int i : maximum_matching(H)) {
            const int player = cert.pi[static_cast<std::size_t>(i)];
            const auto& tuple = T[static_cast<std::size_t>(i)];
            if (!players[static_cast<std::size_t>(player)]->prefers(out.partition, tuple)) {
                ok = false;
                last_failure = "player " + std::to_string(player) +
                               " rejects the allocated tuple at the common partition";
                break;
            }
            out.shares.emplace_back(player, tuple);
        }
        if (!ok) continue;

        std::set<int> seen_players;
        std::set<std::pair<int, int>> seen_pieces;
        for (const auto& [player, tuple] : out.shares) {
            if (!seen_players.insert(player).second)
                throw Error("divide: player allocated twice");
            for (int t = 0; t < d; ++t) {
                if (out.partition.piece_length(t, tuple[static_cast<std::size_t>(t)]) <= 0)
                    throw Error("divide: allocated piece is empty");
                if (!seen_pieces.insert({t, tuple[static_cast<std::size_t>(t)]}).second)
                    throw Error("divide: allocated tuples overlap");
            }
        }
        if (static_cast<int>(out.shares.size()) < guaranteed_allocation_size(m, d))
            throw Error("divide: allocation smaller than the guaranteed bound");
        return out;
    }
    throw Error("divide: witness vertices kept disagreeing after " +
                std::to_string(opts.retry_cap) + " eps halvings (" + last_failure + ")");
}

}  // namespace kkm
