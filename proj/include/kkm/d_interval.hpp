#pragma once

#include "kkm/cover.hpp"
#include "kkm/polytope.hpp"
#include "kkm/solver.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace kkm {

/// Union of d closed intervals with rational endpoints. For the separated
/// variant, component t must lie strictly inside (t, t+1) (0-based).
struct DInterval {
    std::vector<std::pair<Rat, Rat>> comps;  // each a <= b
};

enum class PiercingVariant { General, Separated };

struct PiercingInstance {
    PiercingVariant variant = PiercingVariant::General;
    int d = 1;
    int k = 0;  // general: number of pieces / simplex order
    int m = 0;  // separated: pieces per cake
    std::vector<std::vector<DInterval>> families;

    int colors() const { return static_cast<int>(families.size()); }
    void validate() const;
};

/// Piercing-hypothesis failure: the named color subset's union admits a
/// too-small piercing set.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(std::string msg, std::vector<int> I, std::vector<Rat> cover)
        : Error(std::move(msg)), colors(std::move(I)), piercing_set(std::move(cover)) {}
    std::vector<int> colors;
    std::vector<Rat> piercing_set;
};

struct ColorfulMatching {
    std::vector<std::pair<int, int>> members;  // (family id, member id)
    SolveCertificate certificate;
};

/// Prefix sums p_x(1..k) of a point on the standard simplex.
std::vector<Rat> prefix_points(const RatPoint& x);

/// Rescale into canonical coordinates: general members into (0,1), separated
/// cake-t components into (t, t+1) via per-cake affine maps.
PiercingInstance normalize(const PiercingInstance& inst);

/// Exact piercing number of a finite d-interval family, computed over
/// right-endpoint candidates. Returns min(tau, cap+1); cap bounds the
/// subset search.
int interval_piercing_number(const std::vector<DInterval>& edges, int cap);

/// If some admissible color subset I fails the covering-number hypothesis,
/// return it together with a witnessing piercing set.
std::optional<std::pair<std::vector<int>, std::vector<Rat>>> find_hypothesis_failure(
    const PiercingInstance& inst);

/// Open cover on Delta^{k-1}: x in A^i_{Delta^T} iff some member of family i
/// fits inside the T-cells of the prefix partition and meets each of them.
std::unique_ptr<CoverOracle> interval_cover_oracle(const PiercingInstance& inst,
                                                   const PolytopeModel& P);

/// Open cover on (Delta^{m-1})^d, nonempty only on vertex faces v_T: some
/// member's cake-t component fits strictly inside piece T_t of cake t.
std::unique_ptr<CoverOracle> separated_cover_oracle(const PiercingInstance& inst,
                                                    const PolytopeModel& P);

/// Does this d-interval witness x in A^i_T (general conditions (a)+(b))?
/// prefix has k+1 entries starting at 0; T is 0-based.
bool witnesses_general(const DInterval& f, const std::vector<int>& T,
                       const std::vector<Rat>& prefix);

/// Separated witnessing: component t strictly inside piece T[t] of cake t.
bool witnesses_separated(const DInterval& f, const std::vector<int>& T, const RatPoint& x, int m,
                         int d);

bool dintervals_disjoint(const DInterval& a, const DInterval& b);

struct PierceOptions {
    std::optional<Rat> eps;              // default: 1/64 of the minimum endpoint gap
    bool skip_hypothesis_check = false;  // hypothesis enumeration is exponential in n
    int hypothesis_cap_n = 12;
    SolveOptions solve;
};

/// 1/64 of the smallest gap between distinct normalized endpoint values.
Rat default_eps(const PiercingInstance& normalized);

/// Full Theorem-1.8 pipeline: hypothesis check, cover construction, solver
/// run, exact maximum matching over the certified faces, and extraction of
/// the witnessing intervals. Validates disjointness, colorfulness, and the
/// size bound before returning.
ColorfulMatching pierce(const PiercingInstance& inst, const PierceOptions& opts = {});

/// The guaranteed matching size: ceil(k/(d^2-d+1)) general, ceil(m/(d-1))
/// separated (d >= 2), m for separated d = 1.
int guaranteed_matching_size(const PiercingInstance& inst);

}  // namespace kkm
