#pragma once

#include "kkm/polytope.hpp"
#include "kkm/rational.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace kkm {

/// Membership oracle for a family (A^i_tau | i in [n], tau in F(P)).
/// Queries must be pure; the solver calls them at thousands of points.
class CoverOracle {
public:
    virtual ~CoverOracle() = default;
    virtual int colors() const = 0;
    virtual bool query(int color, FaceId tau, const RatPoint& x) const = 0;
    /// Informational only; open and closed families behave identically at
    /// fixed epsilon.
    virtual bool open_sets() const { return false; }
};

/// A sampled point x whose support sigma is not covered by any A^i_tau with
/// i in I, tau <= sigma. Re-checkable by direct oracle queries.
struct ViolationCertificate {
    RatPoint x;
    std::vector<int> colors;  // |I| = n-m+1
    FaceId sigma = kWholePolytope;
};

class CoverViolation : public Error {
public:
    CoverViolation(std::string msg, ViolationCertificate cert)
        : Error(std::move(msg)), certificate(std::move(cert)) {}
    ViolationCertificate certificate;
};

/// Sampling-based falsification of the m-weakly Komiya cover property.
/// Draws `samples` rational points per face (and in the interior),
/// deterministic from seed, and tests every (n-m+1)-subset of colors.
/// nullopt is not a proof of validity.
std::optional<ViolationCertificate> falsify_weak_cover(const CoverOracle& O,
                                                       const PolytopeModel& P, int m,
                                                       int samples, unsigned long seed);

/// True iff the point/support pair is covered: some tau <= sigma and i in
/// `colors` with query(i, tau, x).
bool covered_at(const CoverOracle& O, const PolytopeModel& P, const std::vector<int>& colors,
                FaceId sigma, const RatPoint& x);

/// Re-check a violation certificate by direct queries.
bool violation_valid(const CoverOracle& O, const PolytopeModel& P,
                     const ViolationCertificate& cert);

/// Oracle defined by an arbitrary predicate; handy for tests and built-ins.
class FunctionCover : public CoverOracle {
public:
    using Fn = std::function<bool(int, FaceId, const RatPoint&)>;
    FunctionCover(int n, Fn fn, bool open = false) : n_(n), fn_(std::move(fn)), open_(open) {}
    int colors() const override { return n_; }
    bool query(int color, FaceId tau, const RatPoint& x) const override {
        return fn_(color, tau, x);
    }
    bool open_sets() const override { return open_; }

private:
    int n_;
    Fn fn_;
    bool open_;
};

/// The weighted closest-vertex cover on a simplex or product of simplices:
/// A^i at a vertex face v_j is the closed region where w^i_j x_j attains the
/// per-factor maximum. Each non-empty color is a Komiya cover on its own
/// (the maximum over a face is attained inside it), so every subfamily
/// union is one too. Non-vertex faces carry empty sets. weights[i], when
/// given, holds one positive weight per ambient coordinate; empty_colors
/// lists colors whose sets are all empty.
class MaxCoordCover : public CoverOracle {
public:
    MaxCoordCover(const PolytopeModel& P, int n, std::vector<int> empty_colors = {},
                  std::vector<std::vector<Rat>> weights = {});
    int colors() const override { return n_; }
    bool query(int color, FaceId tau, const RatPoint& x) const override;

private:
    const PolytopeModel& P_;
    int n_;
    std::vector<bool> empty_;
    std::vector<std::vector<Rat>> weights_;  // per color, per coordinate; empty = all ones
};

/// Enumerate all size-r subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int r);

}  // namespace kkm
