#include "kkm/solver.hpp"

#include "kkm/linprog.hpp"

#include <algorithm>
#include <set>

namespace kkm {

std::pair<std::vector<int>, std::vector<Rat>> panchromatic_search(const Triangulation& T,
                                                                  const Labeling& L,
                                                                  const RatPoint& p) {
    // Checking maximal simplices suffices: the anchor hull of any face is
    // contained in the hull of a maximal simplex above it.
    for (const auto& cell : T.maximal()) {
        std::vector<RatPoint> gens;
        for (int v : cell) gens.push_back(L.y.at(static_cast<std::size_t>(v)));
        if (auto coeffs = in_convex_hull(p, gens)) return {cell, *coeffs};
    }
    throw Error("panchromatic_search: no capturing simplex; labeling violates the "
                "Sperner-Shapley hypotheses");
}

SolveCertificate solve(const PolytopeModel& P, const CoverOracle& O, const AnchorTable& anchors,
                       const Rat& eps, const SolveOptions& opts) {
    if (eps <= 0) throw Error("solve: eps must be positive");
    if (O.colors() < P.simplex_order()) throw Error("solve: fewer colors than k");

    Triangulation T0 = opts.start ? *opts.start : initial_triangulation(P);
    Triangulation Te = refine_to_diameter(T0, eps);
    auto [T, L] = make_good(Te, O, P, anchors, opts.elimination);
    auto [cell, coeffs] = panchromatic_search(T, L, P.reference_point());

    SolveCertificate cert;
    cert.eps = eps;
    cert.witness_ids = cell;
    for (int v : cell) {
        cert.pi.push_back(L.f.at(static_cast<std::size_t>(v)));
        cert.tau.push_back(L.lambda.at(static_cast<std::size_t>(v)));
        cert.witness.push_back(T.vert(v));
    }
    cert.coeffs = coeffs;
    validate_certificate(cert, P, O, anchors);
    return cert;
}

void validate_certificate(const SolveCertificate& cert, const PolytopeModel& P,
                          const CoverOracle& O, const AnchorTable& anchors) {
    const std::size_t k = static_cast<std::size_t>(P.simplex_order());
    if (cert.pi.size() != k || cert.tau.size() != k || cert.witness.size() != k ||
        cert.coeffs.size() != k)
        throw Error("certificate: wrong arity");

    std::set<int> seen(cert.pi.begin(), cert.pi.end());
    if (seen.size() != k) throw Error("certificate: pi is not injective");

    for (std::size_t i = 0; i < k; ++i)
        if (!O.query(cert.pi[i], cert.tau[i], cert.witness[i]))
            throw Error("certificate: witness vertex outside its cover set");

    Rat total = 0;
    RatPoint combo(static_cast<std::size_t>(P.ambient_dim()));
    for (std::size_t i = 0; i < k; ++i) {
        if (cert.coeffs[i] < 0) throw Error("certificate: negative hull coefficient");
        total += cert.coeffs[i];
        combo = combo + cert.coeffs[i] * anchors.at(cert.pi[i], cert.tau[i]);
    }
    if (total != 1) throw Error("certificate: coefficients do not sum to 1");
    if (combo != P.reference_point()) throw Error("certificate: hull identity fails");

    const Rat eps_sq = cert.eps * cert.eps;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (dist_sq(cert.witness[i], cert.witness[j]) > eps_sq)
                throw Error("certificate: witness simplex diameter exceeds eps");
}

}  // namespace kkm
