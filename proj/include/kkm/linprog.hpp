#pragma once

#include "kkm/rational.hpp"

#include <optional>
#include <vector>

namespace kkm {

enum class LpStatus { Feasible, Infeasible, Unbounded };

enum class Rel { Le, Eq, Ge };

/// One linear constraint over implicitly nonnegative variables.
struct LpConstraint {
    std::vector<Rat> coeffs;
    Rel rel = Rel::Le;
    Rat rhs;
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::optional<std::vector<Rat>> solution;
    Rat objective;
};

/// Exact maximization of objective . x subject to the given constraints and
/// x >= 0. Two-phase simplex with Bland's rule, all arithmetic in Rat.
LpResult lp_max(const std::vector<Rat>& objective,
                const std::vector<LpConstraint>& constraints);

/// Exact convex-hull membership: nonnegative coefficients summing to 1 with
/// sum c_i * generators[i] == p, or nullopt if p is outside the hull.
std::optional<std::vector<Rat>> in_convex_hull(const RatPoint& p,
                                               const std::vector<RatPoint>& generators);

}  // namespace kkm
