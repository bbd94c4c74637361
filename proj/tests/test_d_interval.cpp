#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kkm/d_interval.hpp"

#include <set>
#include <vector>

using namespace kkm;

namespace {

DInterval iv(Rat a, Rat b) {
    return DInterval{{{a, b}}};
}

DInterval iv2(Rat a1, Rat b1, Rat a2, Rat b2) {
    return DInterval{{{a1, b1}, {a2, b2}}};
}

// n identical families, each holding `members` pairwise-disjoint intervals.
PiercingInstance copies(PiercingVariant variant, int d, int param, int n,
                        std::vector<DInterval> members) {
    PiercingInstance inst;
    inst.variant = variant;
    inst.d = d;
    (variant == PiercingVariant::General ? inst.k : inst.m) = param;
    inst.families.assign(static_cast<std::size_t>(n), members);
    return inst;
}

void check_output(const PiercingInstance& inst, const ColorfulMatching& M, int want) {
    CHECK(static_cast<int>(M.members.size()) >= want);
    std::set<int> fams;
    for (auto [fam, mem] : M.members) {
        CHECK(fams.insert(fam).second);  // colorful
        CHECK(fam < inst.colors());
        CHECK(mem < static_cast<int>(inst.families[static_cast<std::size_t>(fam)].size()));
    }
}

}  // namespace

TEST_CASE("prefix points") {
    CHECK(prefix_points(RatPoint{rat(1, 2), rat(1, 4), rat(1, 4)}) ==
          std::vector<Rat>{rat(1, 2), rat(3, 4), Rat(1)});
    CHECK(prefix_points(RatPoint{Rat(1), Rat(0), Rat(0)}) ==
          std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK(prefix_points(RatPoint{rat(1, 3), rat(1, 3), rat(1, 3)}) ==
          std::vector<Rat>{rat(1, 3), rat(2, 3), Rat(1)});
    CHECK_THROWS_AS(prefix_points(RatPoint{rat(1, 2), Rat(1)}), Error);
}

TEST_CASE("general cover oracle implements the open prefix conditions") {
    auto inst = copies(PiercingVariant::General, 1, 2, 1, {iv(rat(1, 4), rat(1, 4))});
    auto P = PolytopeModel::simplex(2);
    auto O = interval_cover_oracle(inst, P);

    RatPoint x{rat(1, 2), rat(1, 2)};
    FaceId piece1 = P.face_by_vertex_set({0}), piece2 = P.face_by_vertex_set({1});
    CHECK(O->query(0, piece1, x));   // [1/4,1/4] inside (0,1/2)
    CHECK(!O->query(0, piece2, x));  // 1/4 outside (1/2,1)

    // Degenerate partition: the second piece is empty.
    RatPoint e1{Rat(1), Rat(0)};
    CHECK(!O->query(0, piece2, e1));
    CHECK(O->query(0, piece1, e1));

    // |T| > d carries the empty set.
    CHECK(!O->query(0, kWholePolytope, x));
}

TEST_CASE("separated cover oracle checks every cake") {
    auto inst = copies(PiercingVariant::Separated, 2, 2, 1,
                       {iv2(rat(1, 4), rat(1, 4), rat(5, 4), rat(5, 4))});
    auto P = PolytopeModel::simplex_product(2, 2);
    auto O = separated_cover_oracle(inst, P);

    RatPoint x{rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)};
    auto vface = [&](int a, int b) {
        return P.face_by_vertex_set({P.vertex_by_tuple({a, b})});
    };
    CHECK(O->query(0, vface(0, 0), x));
    CHECK(!O->query(0, vface(1, 0), x));
    CHECK(!O->query(0, vface(0, 1), x));

    // Positive-dimensional faces carry empty sets.
    for (const auto& f : P.faces())
        if (f.dim > 0) CHECK(!O->query(0, f.id, x));
}

TEST_CASE("normalization rescales only when needed") {
    auto inst = copies(PiercingVariant::General, 1, 2, 1, {iv(rat(1, 4), rat(1, 2))});
    auto same = normalize(inst);
    CHECK(same.families[0][0].comps == inst.families[0][0].comps);

    auto wide = copies(PiercingVariant::General, 1, 2, 1, {iv(Rat(10), Rat(11)), iv(Rat(30), Rat(31))});
    auto scaled = normalize(wide);
    for (const auto& f : scaled.families[0])
        for (auto [a, b] : f.comps) {
            CHECK(a > 0);
            CHECK(b < 1);
            CHECK(a <= b);
        }

    auto sep = copies(PiercingVariant::Separated, 2, 2, 1,
                      {iv2(Rat(5), Rat(6), rat(5, 4), rat(3, 2))});
    auto snorm = normalize(sep);
    auto [a0, b0] = snorm.families[0][0].comps[0];
    CHECK(a0 > 0);
    CHECK(b0 < 1);
    // Cake 1 was already inside (1,2) and is untouched.
    CHECK(snorm.families[0][0].comps[1] == sep.families[0][0].comps[1]);
}

TEST_CASE("interval piercing number") {
    std::vector<DInterval> disjoint = {iv(rat(1, 8), rat(1, 4)), iv(rat(3, 8), rat(1, 2)),
                                       iv(rat(5, 8), rat(3, 4))};
    CHECK(interval_piercing_number(disjoint, 5) == 3);
    CHECK(interval_piercing_number(disjoint, 1) == 2);  // capped search reports cap+1
    CHECK(interval_piercing_number({iv(Rat(0), Rat(1)), iv(rat(1, 4), rat(1, 2))}, 5) == 1);
    CHECK(interval_piercing_number({}, 5) == 0);
    // One piercing point can serve both components of a 2-interval family.
    std::vector<DInterval> shared = {iv2(rat(1, 8), rat(1, 4), rat(5, 8), rat(3, 4)),
                                     iv2(rat(1, 8), rat(1, 4), rat(3, 8), rat(1, 2))};
    CHECK(interval_piercing_number(shared, 5) == 1);
}

TEST_CASE("hypothesis failures are found and certified") {
    auto bad = copies(PiercingVariant::General, 1, 2, 2, {iv(rat(1, 4), rat(1, 2))});
    auto fail = find_hypothesis_failure(bad);
    REQUIRE(fail);
    CHECK(static_cast<int>(fail->second.size()) < bad.k);
    // The returned points really pierce every member of the named families.
    for (int i : fail->first)
        for (const auto& f : bad.families[static_cast<std::size_t>(i)]) {
            bool hit = false;
            for (const auto& p : fail->second)
                for (auto [a, b] : f.comps) hit |= (a <= p && p <= b);
            CHECK(hit);
        }

    std::vector<DInterval> three = {iv(rat(1, 8), rat(1, 4)), iv(rat(3, 8), rat(1, 2)),
                                    iv(rat(5, 8), rat(3, 4))};
    CHECK(!find_hypothesis_failure(copies(PiercingVariant::General, 1, 3, 3, three)));
}

TEST_CASE("interval piercing with d = 1 recovers a full colorful system") {
    std::vector<DInterval> three = {iv(rat(1, 8), rat(1, 4)), iv(rat(3, 8), rat(1, 2)),
                                    iv(rat(5, 8), rat(3, 4))};
    auto inst = copies(PiercingVariant::General, 1, 3, 3, three);
    CHECK(default_eps(inst) == rat(1, 512));  // min endpoint gap 1/8, over 64

    PierceOptions opts;  // the default eps is needlessly fine for a unit test
    opts.eps = rat(1, 32);
    auto M = pierce(inst, opts);
    check_output(inst, M, 3);
    for (std::size_t i = 0; i < M.members.size(); ++i)
        for (std::size_t j = i + 1; j < M.members.size(); ++j)
            CHECK(dintervals_disjoint(
                inst.families[static_cast<std::size_t>(M.members[i].first)]
                             [static_cast<std::size_t>(M.members[i].second)],
                inst.families[static_cast<std::size_t>(M.members[j].first)]
                             [static_cast<std::size_t>(M.members[j].second)]));
}

TEST_CASE("piercing rescales raw coordinates internally") {
    std::vector<DInterval> raw = {iv(Rat(10), Rat(11)), iv(Rat(20), Rat(21)),
                                  iv(Rat(30), Rat(31))};
    auto inst = copies(PiercingVariant::General, 1, 3, 3, raw);
    PierceOptions opts;
    opts.eps = rat(1, 32);
    auto M = pierce(inst, opts);
    check_output(inst, M, 3);
}

TEST_CASE("general 2-interval piercing meets the k/(d^2-d+1) bound") {
    std::vector<DInterval> members;
    for (long j = 0; j < 3; ++j)
        members.push_back(iv2(rat(4 * j + 1, 16), rat(4 * j + 2, 16), rat(4 * j + 3, 16),
                              rat(4 * j + 4, 16)));
    auto inst = copies(PiercingVariant::General, 2, 3, 3, members);
    CHECK(guaranteed_matching_size(inst) == 1);
    PierceOptions opts;
    opts.eps = rat(1, 16);
    auto M = pierce(inst, opts);
    check_output(inst, M, 1);
    for (const auto& f : M.certificate.tau)
        CHECK(PolytopeModel::simplex(3).face(f).dim < 2);  // |T_i| <= d
}

TEST_CASE("separated piercing allocates at least m/(d-1)") {
    std::vector<DInterval> members;
    for (long j = 0; j < 5; ++j)
        members.push_back(
            iv2(rat(2 * j + 1, 11), rat(2 * j + 1, 11), Rat(1) + rat(2 * j + 1, 11),
                Rat(1) + rat(2 * j + 1, 11)));
    auto inst = copies(PiercingVariant::Separated, 2, 3, 5, members);
    CHECK(guaranteed_matching_size(inst) == 3);
    PierceOptions opts;
    opts.eps = rat(1, 4);
    auto M = pierce(inst, opts);
    check_output(inst, M, 3);
}

TEST_CASE("pierce rejects instances that fail the hypothesis") {
    auto bad = copies(PiercingVariant::General, 1, 2, 2, {iv(rat(1, 4), rat(1, 2))});
    CHECK_THROWS_AS(pierce(bad), HypothesisViolation);

    PierceOptions skip;
    skip.skip_hypothesis_check = true;
    skip.eps = rat(1, 16);
    CHECK_THROWS_AS(pierce(copies(PiercingVariant::General, 1, 3, 2,
                                  {iv(rat(1, 8), rat(1, 4))}),
                           skip),
                    Error);  // n < k is structural
}

TEST_CASE("guaranteed sizes") {
    CHECK(guaranteed_matching_size(copies(PiercingVariant::General, 2, 5, 5, {})) == 2);
    CHECK(guaranteed_matching_size(copies(PiercingVariant::General, 3, 7, 7, {})) == 1);
    CHECK(guaranteed_matching_size(copies(PiercingVariant::Separated, 1, 3, 3, {})) == 3);
    CHECK(guaranteed_matching_size(copies(PiercingVariant::Separated, 2, 4, 7, {})) == 4);
}

TEST_CASE("disjointness is per-component and exact") {
    CHECK(dintervals_disjoint(iv(Rat(0), rat(1, 4)), iv(rat(1, 2), Rat(1))));
    CHECK(!dintervals_disjoint(iv(Rat(0), rat(1, 2)), iv(rat(1, 2), Rat(1))));  // shared point
    CHECK(!dintervals_disjoint(iv2(Rat(0), rat(1, 8), rat(1, 2), rat(5, 8)),
                               iv(rat(9, 16), rat(3, 4))));
}
