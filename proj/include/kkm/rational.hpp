#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kkm {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), which is exactly the invariant we need; no floating point
// appears anywhere on a decision path.
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Point with exact rational coordinates in a fixed ambient dimension.
struct RatPoint {
    std::vector<Rat> coords;

    RatPoint() = default;
    explicit RatPoint(std::size_t dim) : coords(dim) {}
    RatPoint(std::initializer_list<Rat> cs) : coords(cs) {}

    std::size_t dim() const { return coords.size(); }
    Rat& operator[](std::size_t i) { return coords[i]; }
    const Rat& operator[](std::size_t i) const { return coords[i]; }

    bool operator==(const RatPoint& o) const { return coords == o.coords; }
    bool operator!=(const RatPoint& o) const { return coords != o.coords; }
    bool operator<(const RatPoint& o) const {
        if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            int c = cmp(coords[i], o.coords[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

inline RatPoint operator+(const RatPoint& a, const RatPoint& b) {
    if (a.dim() != b.dim()) throw Error("point dimension mismatch");
    RatPoint r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatPoint operator-(const RatPoint& a, const RatPoint& b) {
    if (a.dim() != b.dim()) throw Error("point dimension mismatch");
    RatPoint r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatPoint operator*(const Rat& s, const RatPoint& a) {
    RatPoint r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
}

/// Exact midpoint (a+b)/2.
inline RatPoint midpoint(const RatPoint& a, const RatPoint& b) {
    if (a.dim() != b.dim()) throw Error("midpoint: dimension mismatch");
    RatPoint r(a.dim());
    const Rat half(1, 2);
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = half * (a[i] + b[i]);
    return r;
}

/// Left fold of midpoints: b(v1,...,v_{m+1}) = b(b(v1,...,v_m), v_{m+1}).
inline RatPoint iterated_barycenter(const std::vector<RatPoint>& points) {
    if (points.empty()) throw Error("iterated_barycenter: empty list");
    RatPoint acc = points[0];
    for (std::size_t i = 1; i < points.size(); ++i) acc = midpoint(acc, points[i]);
    return acc;
}

/// Squared Euclidean distance, exact.
inline Rat dist_sq(const RatPoint& a, const RatPoint& b) {
    if (a.dim() != b.dim()) throw Error("dist_sq: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Rat d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline std::string to_string(const Rat& r) {
    return r.get_str();
}

inline std::string to_string(const RatPoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) s += ", ";
        s += p[i].get_str();
    }
    return s + ")";
}

}  // namespace kkm
