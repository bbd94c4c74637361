#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kkm/linprog.hpp"
#include "kkm/polytope.hpp"

#include <vector>

using namespace kkm;

namespace {

RatPoint unit(int k, int i) {
    RatPoint p(static_cast<std::size_t>(k));
    p[static_cast<std::size_t>(i)] = 1;
    return p;
}

}  // namespace

TEST_CASE("simplex lattice sizes") {
    auto s2 = PolytopeModel::simplex(2);
    CHECK(s2.dim() == 1);
    CHECK(s2.faces().size() == 2);
    CHECK(s2.reference_point() == RatPoint{rat(1, 2), rat(1, 2)});

    CHECK(PolytopeModel::simplex(3).faces().size() == 6);   // 2^3 - 2
    CHECK(PolytopeModel::simplex(4).faces().size() == 14);  // 2^4 - 2
    CHECK_THROWS_AS(PolytopeModel::simplex(1), Error);
}

TEST_CASE("faces are ordered by dimension then vertex set") {
    auto P = PolytopeModel::simplex(3);
    const auto& fs = P.faces();
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        CHECK(fs[i].id == static_cast<FaceId>(i));
        bool le = fs[i].dim < fs[i + 1].dim ||
                  (fs[i].dim == fs[i + 1].dim && fs[i].vertex_ids < fs[i + 1].vertex_ids);
        CHECK(le);
    }
    CHECK(fs[0].vertex_ids == std::vector<int>{0});
    CHECK(fs[3].vertex_ids == std::vector<int>{0, 1});
}

TEST_CASE("simplex product lattices") {
    auto seg = PolytopeModel::simplex_product(2, 1);
    CHECK(seg.dim() == 1);
    CHECK(seg.faces().size() == 2);  // same lattice as simplex(2)

    auto square = PolytopeModel::simplex_product(2, 2);
    CHECK(square.dim() == 2);
    CHECK(square.vertex_count() == 4);
    CHECK(square.faces().size() == 8);  // 4 vertices + 4 edges

    auto prism2 = PolytopeModel::simplex_product(3, 2);
    CHECK(prism2.vertex_count() == 9);
    CHECK(prism2.dim() == 4);

    CHECK_THROWS_AS(PolytopeModel::simplex_product(1, 2), Error);
}

TEST_CASE("product vertex tuples round-trip") {
    auto P = PolytopeModel::simplex_product(3, 2);
    for (int id = 0; id < 9; ++id) {
        auto t = P.tuple_of_vertex(id);
        CHECK(P.vertex_by_tuple(t) == id);
        // Coordinates: cake t has a 1 at slot t*3 + tuple[t].
        const auto& v = P.vertex(id);
        for (int cake = 0; cake < 2; ++cake)
            for (int j = 0; j < 3; ++j)
                CHECK(v[static_cast<std::size_t>(cake * 3 + j)] ==
                      (j == t[static_cast<std::size_t>(cake)] ? 1 : 0));
    }
}

TEST_CASE("support on the triangle") {
    auto P = PolytopeModel::simplex(3);
    CHECK(P.face(P.support(unit(3, 0))).vertex_ids == std::vector<int>{0});
    CHECK(P.face(P.support(RatPoint{rat(1, 2), rat(1, 2), Rat(0)})).vertex_ids ==
          std::vector<int>{0, 1});
    CHECK(P.support(RatPoint{rat(1, 3), rat(1, 3), rat(1, 3)}) == kWholePolytope);
    CHECK_THROWS_AS(P.support(RatPoint{Rat(1), Rat(1), Rat(-1)}), Error);
}

TEST_CASE("support is minimal across the whole lattice") {
    for (auto P : {PolytopeModel::simplex(4), PolytopeModel::simplex_product(2, 2)}) {
        for (const auto& rec : P.faces()) {
            RatPoint b = P.face_barycenter(rec.id);
            FaceId s = P.support(b);
            CHECK(s == rec.id);  // barycenter is interior to its face
            // No containing face is smaller.
            for (const auto& other : P.faces())
                if (in_convex_hull(b, [&] {
                        std::vector<RatPoint> vs;
                        for (int v : other.vertex_ids) vs.push_back(P.vertex(v));
                        return vs;
                    }()))
                    CHECK(std::includes(other.vertex_ids.begin(), other.vertex_ids.end(),
                                        rec.vertex_ids.begin(), rec.vertex_ids.end()));
        }
    }
}

TEST_CASE("faces_within yields exactly the subfaces in order") {
    auto P = PolytopeModel::simplex(3);
    FaceId edge = P.face_by_vertex_set({0, 2});
    auto subs = P.faces_within(edge);
    REQUIRE(subs.size() == 3);
    CHECK(P.face(subs[0]).vertex_ids == std::vector<int>{0});
    CHECK(P.face(subs[1]).vertex_ids == std::vector<int>{2});
    CHECK(P.face(subs[2]).vertex_ids == std::vector<int>{0, 2});
    CHECK(P.faces_within(kWholePolytope).size() == P.faces().size());
}

TEST_CASE("default anchors sit at face barycenters") {
    auto s1 = PolytopeModel::simplex(2);
    auto a1 = default_anchors(s1, 3);
    for (int i = 0; i < 3; ++i)
        CHECK(a1.at(i, s1.face_by_vertex_set({0})) == unit(2, 0));

    auto s2 = PolytopeModel::simplex(3);
    auto a2 = default_anchors(s2, 2);
    CHECK(a2.at(1, s2.face_by_vertex_set({0, 1})) ==
          RatPoint{rat(1, 2), rat(1, 2), Rat(0)});

    auto sq = PolytopeModel::simplex_product(2, 2);
    int v00 = sq.vertex_by_tuple({0, 0});
    int v01 = sq.vertex_by_tuple({0, 1});
    FaceId e = sq.face_by_vertex_set([&] {
        std::vector<int> ids{v00, v01};
        std::sort(ids.begin(), ids.end());
        return ids;
    }());
    auto a3 = default_anchors(sq, 2);
    CHECK(a3.at(0, e) == midpoint(sq.vertex(v00), sq.vertex(v01)));

    // Admission: every anchor is in its face's hull.
    for (int i = 0; i < 2; ++i)
        for (const auto& rec : sq.faces()) {
            std::vector<RatPoint> vs;
            for (int v : rec.vertex_ids) vs.push_back(sq.vertex(v));
            CHECK(in_convex_hull(a3.at(i, rec.id), vs).has_value());
        }
}

TEST_CASE("explicit polytopes validate their data") {
    // Unit square with explicit lattice.
    std::vector<RatPoint> verts = {RatPoint{Rat(0), Rat(0)}, RatPoint{Rat(1), Rat(0)},
                                   RatPoint{Rat(0), Rat(1)}, RatPoint{Rat(1), Rat(1)}};
    std::vector<std::vector<int>> faces = {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 3}, {2, 3}};
    auto P = PolytopeModel::from_data(verts, faces, RatPoint{rat(1, 2), rat(1, 2)});
    CHECK(P.dim() == 2);
    CHECK(P.faces().size() == 8);
    CHECK(P.face(P.support(RatPoint{rat(1, 2), Rat(0)})).vertex_ids == std::vector<int>{0, 1});
    CHECK(P.support(RatPoint{rat(1, 3), rat(2, 3)}) == kWholePolytope);

    // Reference point outside P.
    CHECK_THROWS_AS(PolytopeModel::from_data(verts, faces, RatPoint{Rat(2), Rat(0)}), Error);

    // Dropping an edge breaks intersection closure... but a missing vertex
    // face does: {0,1} ∩ {0,2} = {0} must be present.
    std::vector<std::vector<int>> broken = {{1}, {2}, {3}, {0, 1}, {0, 2}, {1, 3}, {2, 3}};
    CHECK_THROWS_AS(
        PolytopeModel::from_data(verts, broken, RatPoint{rat(1, 2), rat(1, 2)}), Error);
}

TEST_CASE("affine rank") {
    CHECK(affine_rank({unit(3, 0)}) == 0);
    CHECK(affine_rank({unit(3, 0), unit(3, 1)}) == 1);
    CHECK(affine_rank({unit(3, 0), unit(3, 1), unit(3, 2)}) == 2);
    CHECK(affine_rank({RatPoint{Rat(0)}, RatPoint{Rat(1)}, RatPoint{rat(1, 2)}}) == 1);
}
