#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kkm/cover.hpp"
#include "kkm/d_interval.hpp"

#include <vector>

using namespace kkm;

TEST_CASE("subsets_of_size enumerates in lexicographic order") {
    auto s = subsets_of_size(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<int>{0, 1});
    CHECK(s[1] == std::vector<int>{0, 2});
    CHECK(s.back() == std::vector<int>{2, 3});
    CHECK(subsets_of_size(3, 0) == std::vector<std::vector<int>>{{}});
    CHECK(subsets_of_size(2, 3).empty());
}

TEST_CASE("closest-vertex cover on the segment is a valid 2-weak cover") {
    auto P = PolytopeModel::simplex(2);
    MaxCoordCover O(P, 2);
    // Closed halves: x in A^i_{v_j} iff x_j is the max coordinate.
    FaceId v0 = P.face_by_vertex_set({0}), v1 = P.face_by_vertex_set({1});
    CHECK(O.query(0, v0, RatPoint{Rat(1), Rat(0)}));
    CHECK(O.query(1, v0, RatPoint{rat(3, 4), rat(1, 4)}));
    CHECK(!O.query(0, v0, RatPoint{rat(1, 4), rat(3, 4)}));
    CHECK(O.query(0, v1, RatPoint{rat(1, 2), rat(1, 2)}));  // boundary: closed sets

    CHECK(!falsify_weak_cover(O, P, 2, 50, 1));
}

TEST_CASE("an empty color is caught by falsification") {
    auto P = PolytopeModel::simplex(2);
    MaxCoordCover O(P, 2, {0});
    auto v = falsify_weak_cover(O, P, 2, 20, 1);
    REQUIRE(v);
    CHECK(v->colors == std::vector<int>{0});
    CHECK(violation_valid(O, P, *v));

    // With m = 1 the two colors may cover jointly; color 1 alone suffices.
    CHECK(!falsify_weak_cover(O, P, 1, 20, 1));
}

TEST_CASE("falsification is deterministic in the seed") {
    auto P = PolytopeModel::simplex(3);
    MaxCoordCover O(P, 3, {1});
    auto a = falsify_weak_cover(O, P, 3, 10, 42);
    auto b = falsify_weak_cover(O, P, 3, 10, 42);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->x == b->x);
    CHECK(a->colors == b->colors);
    CHECK(a->sigma == b->sigma);
}

TEST_CASE("covered_at scans exactly the subfaces of sigma") {
    auto P = PolytopeModel::simplex(3);
    FaceId e01 = P.face_by_vertex_set({0, 1});
    FunctionCover O(1, [&](int, FaceId tau, const RatPoint&) { return tau == e01; });
    RatPoint x{rat(1, 2), rat(1, 2), Rat(0)};
    CHECK(covered_at(O, P, {0}, e01, x));
    CHECK(covered_at(O, P, {0}, kWholePolytope, x));
    CHECK(!covered_at(O, P, {0}, P.face_by_vertex_set({0, 2}), x));
}

TEST_CASE("weighted closest-vertex cover shifts the boundary") {
    auto P = PolytopeModel::simplex(2);
    // Color 0 weighs coordinate 0 triple: its v0 region reaches x_0 >= 1/4.
    MaxCoordCover O(P, 1, {}, {{Rat(3), Rat(1)}});
    FaceId v0 = P.face_by_vertex_set({0});
    CHECK(O.query(0, v0, RatPoint{rat(1, 4), rat(3, 4)}));
    CHECK(!O.query(0, v0, RatPoint{rat(1, 5), rat(4, 5)}));
    CHECK(!falsify_weak_cover(O, P, 1, 50, 3));
}

TEST_CASE("product cover takes per-factor maxima and only vertex faces") {
    auto P = PolytopeModel::simplex_product(2, 2);
    MaxCoordCover O(P, 2);
    int v = P.vertex_by_tuple({0, 1});
    FaceId vf = P.face_by_vertex_set({v});
    CHECK(O.query(0, vf, RatPoint{rat(3, 4), rat(1, 4), rat(1, 4), rat(3, 4)}));
    CHECK(!O.query(0, vf, RatPoint{rat(1, 4), rat(3, 4), rat(1, 4), rat(3, 4)}));
    for (const auto& f : P.faces())
        if (f.dim > 0) CHECK(!O.query(0, f.id, P.face_barycenter(f.id)));
    CHECK(!falsify_weak_cover(O, P, 2, 20, 5));
}

TEST_CASE("interval-derived cover passes sampling when the hypothesis holds") {
    // Two interval families (d=1, k=2), each pierced only by >= 2 points.
    PiercingInstance inst;
    inst.variant = PiercingVariant::General;
    inst.d = 1;
    inst.k = 2;
    inst.families = {
        {{{{rat(1, 8), rat(1, 4)}}}, {{{rat(3, 4), rat(7, 8)}}}},
        {{{{rat(1, 8), rat(3, 8)}}}, {{{rat(5, 8), rat(7, 8)}}}},
    };
    auto P = PolytopeModel::simplex(2);
    auto O = interval_cover_oracle(inst, P);
    CHECK(O->open_sets());
    CHECK(!falsify_weak_cover(*O, P, 2, 1000, 9));
}
