#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kkm/linprog.hpp"
#include "kkm/rational.hpp"

#include <optional>
#include <random>
#include <vector>

using namespace kkm;

namespace {

Rat rnd_rat(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = 1 + static_cast<long>(rng() % 12);
    return rat(num, den);
}

// Independent oracle: enumerate all basic points (intersections of n active
// constraints, counting x_i = 0 as constraints), keep the feasible ones, and
// take the best objective. Exact and exponential; test-size LPs only.
std::optional<Rat> brute_lp_max(const std::vector<Rat>& obj,
                                const std::vector<LpConstraint>& cons) {
    const std::size_t n = obj.size();
    // Collect rows a·x (rel) b as pairs; equalities are always active.
    struct Row {
        std::vector<Rat> a;
        Rat b;
        Rel rel;
    };
    std::vector<Row> rows;
    for (const auto& c : cons) rows.push_back({c.coeffs, c.rhs, c.rel});
    for (std::size_t i = 0; i < n; ++i) {  // x_i >= 0
        std::vector<Rat> a(n, Rat(0));
        a[i] = 1;
        rows.push_back({a, Rat(0), Rel::Ge});
    }

    std::optional<Rat> best;
    const std::size_t m = rows.size();
    // All n-subsets of rows, solved as equalities by Gaussian elimination.
    auto solve_and_score = [&](const std::vector<std::size_t>& sel) {
        std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) M[r][c] = rows[sel[r]].a[c];
            M[r][n] = rows[sel[r]].b;
        }
        for (std::size_t col = 0, row = 0; col < n && row < n; ++col) {
            std::size_t piv = row;
            while (piv < n && M[piv][col] == 0) ++piv;
            if (piv == n) return;  // singular: no unique vertex
            std::swap(M[piv], M[row]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == row || M[r][col] == 0) continue;
                Rat factor = M[r][col] / M[row][col];
                for (std::size_t c = col; c <= n; ++c) M[r][c] -= factor * M[row][c];
            }
            ++row;
        }
        std::vector<Rat> x(n);
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t lead = 0;
            while (lead < n && M[r][lead] == 0) ++lead;
            if (lead == n) return;
            x[lead] = M[r][n] / M[r][lead];
        }
        for (const auto& row2 : rows) {
            Rat lhs = 0;
            for (std::size_t c = 0; c < n; ++c) lhs += row2.a[c] * x[c];
            if (row2.rel == Rel::Le && lhs > row2.b) return;
            if (row2.rel == Rel::Ge && lhs < row2.b) return;
            if (row2.rel == Rel::Eq && lhs != row2.b) return;
        }
        Rat score = 0;
        for (std::size_t c = 0; c < n; ++c) score += obj[c] * x[c];
        if (!best || score > *best) best = score;
    };
    std::vector<std::size_t> sel(n);
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
        if (depth == n) {
            solve_and_score(sel);
            return;
        }
        for (std::size_t i = from; i < m; ++i) {
            sel[depth] = i;
            self(self, depth + 1, i + 1);
        }
    };
    if (n <= m) rec(rec, 0, 0);
    return best;
}

LpConstraint row(std::vector<Rat> a, Rel rel, Rat b) {
    return LpConstraint{std::move(a), rel, std::move(b)};
}

}  // namespace

TEST_CASE("midpoint") {
    CHECK(midpoint(RatPoint{Rat(0)}, RatPoint{Rat(1)}) == RatPoint{rat(1, 2)});
    CHECK(midpoint(RatPoint{Rat(0), Rat(0)}, RatPoint{Rat(0), Rat(0)}) ==
          RatPoint{Rat(0), Rat(0)});
    CHECK(midpoint(RatPoint{rat(1, 2), rat(1, 4)}, RatPoint{rat(1, 4), rat(3, 4)}) ==
          RatPoint{rat(3, 8), rat(1, 2)});
    CHECK_THROWS_AS(midpoint(RatPoint{Rat(0)}, RatPoint{Rat(0), Rat(0)}), Error);
}

TEST_CASE("iterated barycenter folds midpoints from the left") {
    CHECK(iterated_barycenter({RatPoint{Rat(0)}, RatPoint{Rat(1)}}) == RatPoint{rat(1, 2)});
    CHECK(iterated_barycenter({RatPoint{Rat(0)}, RatPoint{Rat(1)}, RatPoint{Rat(1)}}) ==
          RatPoint{rat(3, 4)});
    CHECK(iterated_barycenter({RatPoint{Rat(0), Rat(0)}, RatPoint{Rat(1), Rat(0)},
                               RatPoint{Rat(0), Rat(1)}}) == RatPoint{rat(1, 4), rat(1, 2)});
    CHECK_THROWS_AS(iterated_barycenter({}), Error);
}

TEST_CASE("hull membership") {
    auto c = in_convex_hull(RatPoint{rat(1, 2)}, {RatPoint{Rat(0)}, RatPoint{Rat(1)}});
    REQUIRE(c);
    CHECK(*c == std::vector<Rat>{rat(1, 2), rat(1, 2)});

    CHECK(!in_convex_hull(RatPoint{Rat(2)}, {RatPoint{Rat(0)}, RatPoint{Rat(1)}}));

    auto b = in_convex_hull(RatPoint{rat(1, 3), rat(1, 3)},
                            {RatPoint{Rat(0), Rat(0)}, RatPoint{Rat(1), Rat(0)},
                             RatPoint{Rat(0), Rat(1)}});
    REQUIRE(b);
    CHECK(*b == std::vector<Rat>{rat(1, 3), rat(1, 3), rat(1, 3)});

    CHECK_THROWS_AS(in_convex_hull(RatPoint{Rat(0)}, {RatPoint{Rat(0), Rat(0)}}), Error);
}

TEST_CASE("hull membership identities and monotonicity on random instances") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; ++it) {
        const std::size_t dim = 1 + rng() % 3, ng = 1 + rng() % 5;
        std::vector<RatPoint> gens;
        for (std::size_t g = 0; g < ng; ++g) {
            RatPoint p(dim);
            for (std::size_t c = 0; c < dim; ++c) p[c] = rnd_rat(rng);
            gens.push_back(p);
        }
        RatPoint q(dim);
        for (std::size_t c = 0; c < dim; ++c) q[c] = rnd_rat(rng);
        auto coeffs = in_convex_hull(q, gens);
        if (coeffs) {
            Rat total = 0;
            RatPoint combo(dim);
            for (std::size_t g = 0; g < ng; ++g) {
                CHECK((*coeffs)[g] >= 0);
                total += (*coeffs)[g];
                combo = combo + (*coeffs)[g] * gens[g];
            }
            CHECK(total == 1);
            CHECK(combo == q);
            // Monotone under adding generators.
            auto more = gens;
            more.push_back(RatPoint(dim));
            CHECK(in_convex_hull(q, more).has_value());
        }
        // Any random convex combination is always inside.
        RatPoint mix(dim);
        Rat wsum = 0;
        std::vector<Rat> w(ng);
        for (std::size_t g = 0; g < ng; ++g) {
            w[g] = rat(static_cast<long>(rng() % 8), 8);
            wsum += w[g];
        }
        if (wsum > 0) {
            for (std::size_t g = 0; g < ng; ++g) mix = mix + (w[g] / wsum) * gens[g];
            CHECK(in_convex_hull(mix, gens).has_value());
        }
    }
}

TEST_CASE("rational arithmetic round-trips and stays reduced") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        Rat a = rnd_rat(rng), b = rnd_rat(rng);
        CHECK(Rat((a + b) - b) == a);
        Rat s = a + b;
        CHECK(s.get_den() > 0);
        Int g;
        mpz_gcd(g.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
        CHECK((s == 0 || g == 1));
    }
}

TEST_CASE("lp_max basics") {
    auto r1 = lp_max({Rat(1)}, {row({Rat(1)}, Rel::Le, rat(3, 2))});
    REQUIRE(r1.status == LpStatus::Feasible);
    CHECK(r1.objective == rat(3, 2));

    auto r2 = lp_max({Rat(1), Rat(1)}, {row({Rat(1), Rat(1)}, Rel::Le, Rat(1))});
    REQUIRE(r2.status == LpStatus::Feasible);
    CHECK(r2.objective == Rat(1));

    // nu* LP of K_3: one <=1 row per vertex, edge variables.
    std::vector<LpConstraint> k3 = {
        row({Rat(1), Rat(1), Rat(0)}, Rel::Le, Rat(1)),
        row({Rat(1), Rat(0), Rat(1)}, Rel::Le, Rat(1)),
        row({Rat(0), Rat(1), Rat(1)}, Rel::Le, Rat(1)),
    };
    auto r3 = lp_max({Rat(1), Rat(1), Rat(1)}, k3);
    REQUIRE(r3.status == LpStatus::Feasible);
    CHECK(r3.objective == rat(3, 2));

    auto r4 = lp_max({Rat(1)}, {row({Rat(1)}, Rel::Ge, Rat(0))});
    CHECK(r4.status == LpStatus::Unbounded);

    auto r5 = lp_max({Rat(1)}, {row({Rat(1)}, Rel::Le, Rat(-1))});
    CHECK(r5.status == LpStatus::Infeasible);
}

TEST_CASE("lp_max agrees with exhaustive vertex enumeration") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 50; ++it) {
        const std::size_t n = 1 + rng() % 3;
        std::vector<Rat> obj;
        for (std::size_t i = 0; i < n; ++i) obj.push_back(rnd_rat(rng));
        std::vector<LpConstraint> cons;
        // Bounding box keeps every instance bounded and feasible at 0.
        cons.push_back(row(std::vector<Rat>(n, Rat(1)), Rel::Le, Rat(10)));
        const std::size_t extra = rng() % 3;
        for (std::size_t c = 0; c < extra; ++c) {
            std::vector<Rat> a;
            for (std::size_t i = 0; i < n; ++i) a.push_back(rnd_rat(rng));
            cons.push_back(row(std::move(a), rng() % 2 ? Rel::Le : Rel::Ge, rnd_rat(rng)));
        }
        auto got = lp_max(obj, cons);
        auto want = brute_lp_max(obj, cons);
        if (want) {
            REQUIRE(got.status == LpStatus::Feasible);
            CHECK(got.objective == *want);
        } else {
            CHECK(got.status == LpStatus::Infeasible);
        }
    }
}
