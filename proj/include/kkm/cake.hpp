#pragma once

#include "kkm/cover.hpp"
#include "kkm/polytope.hpp"
#include "kkm/solver.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace kkm {

/// A simultaneous partition of d unit-interval cakes into m interval pieces
/// each, encoded as a point of (Delta^{m-1})^d: coordinate (t, j) is the
/// length of piece j of cake t.
struct Partition {
    int m = 0, d = 0;
    RatPoint x;  // concatenated simplex coordinates, length m*d

    Partition() = default;
    Partition(int m_, int d_, RatPoint coords);

    Rat piece_length(int cake, int piece) const;
    /// Cumulative cut positions p(1..m-1) of one cake.
    std::vector<Rat> cuts(int cake) const;
    /// Piece `piece` of `cake` as the open interval (p(j-1), p(j)) in [0,1].
    std::pair<Rat, Rat> piece_interval(int cake, int piece) const;
};

/// Preference oracle for one player. Must be pure; the solver evaluates it
/// at thousands of partitions. Tuples are 0-based, one piece index per cake.
class PlayerOracle {
public:
    virtual ~PlayerOracle() = default;
    virtual bool prefers(const Partition& x, const std::vector<int>& tuple) const = 0;
};

/// Hungry player with a piecewise-constant rational density per cake:
/// prefers the tuple of nonempty pieces maximizing total measure, smallest
/// tuple lexicographically on ties. Always prefers exactly one tuple, and
/// only tuples of nonempty pieces, so each such player is hungry on its own.
class HungryMaxPlayer : public PlayerOracle {
public:
    struct Segment {
        Rat value;  // density, >= 0
        Rat from, to;
    };
    /// densities[t] describes cake t over [0,1].
    HungryMaxPlayer(int m, int d, std::vector<std::vector<Segment>> densities);

    bool prefers(const Partition& x, const std::vector<int>& tuple) const override;
    Rat piece_measure(const Partition& x, int cake, int piece) const;
    std::vector<int> favorite_tuple(const Partition& x) const;

private:
    int m_, d_;
    std::vector<std::vector<Segment>> densities_;
};

/// Arbitrary predicate player; used to script test scenarios.
class FunctionPlayer : public PlayerOracle {
public:
    using Fn = std::function<bool(const Partition&, const std::vector<int>&)>;
    explicit FunctionPlayer(Fn fn) : fn_(std::move(fn)) {}
    bool prefers(const Partition& x, const std::vector<int>& tuple) const override {
        return fn_(x, tuple);
    }

private:
    Fn fn_;
};

struct Allocation {
    std::vector<std::pair<int, std::vector<int>>> shares;  // (player, tuple)
    Partition partition;
    SolveCertificate certificate;
    int rounds = 1;  // eps halvings + 1
};

/// Cover on (Delta^{m-1})^d: query(i, v_T, x) = player i prefers tuple T at
/// the partition x; non-vertex faces carry empty sets.
std::unique_ptr<CoverOracle> preference_cover_oracle(
    const std::vector<const PlayerOracle*>& players, const PolytopeModel& P);

struct DivideOptions {
    int retry_cap = 6;  // eps halvings when witness vertices disagree
    SolveOptions solve;
};

/// ceil(m/(d-1)) for d >= 2; m for d = 1.
int guaranteed_allocation_size(int m, int d);

/// Find a partition of d cakes into m pieces and allocate pairwise disjoint
/// piece tuples to at least guaranteed_allocation_size(m, d) players, each
/// re-verified by a direct preference query at the output partition.
Allocation divide(const std::vector<const PlayerOracle*>& players, int m, int d, const Rat& eps,
                  const DivideOptions& opts = {});

}  // namespace kkm
