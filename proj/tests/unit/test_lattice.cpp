#include "atoric/lattice.hpp"
#include "atoric/errors.hpp"
#include "atoric/wedge.hpp"
#include "support/gen.hpp"
#include "support/print.hpp"

#include <doctest.h>

using namespace atoric;

TEST_CASE("apply") {
    ZAffineMap id;
    CHECK(id.apply(PlanePoint{3, 7}) == PlanePoint{3, 7});
    ZAffineMap A = ZAffineMap::linear(Mat2{0, 1, -1, 2});
    CHECK(A.apply(LatticeVector{1, 1}) == LatticeVector{1, 1});
    CHECK(A.apply(LatticeVector{1, 0}) == LatticeVector{0, -1});
    ZAffineMap T = ZAffineMap::about(PlanePoint{2, 2}, Mat2{0, 1, -1, 2});
    CHECK(T.apply(PlanePoint{6, 0}) == PlanePoint{0, -6});
    CHECK((T * T.inverse()) == ZAffineMap());
    CHECK_THROWS_AS(ZAffineMap::linear(Mat2{2, 0, 0, 1}), ValidationError);
}

TEST_CASE("vertex_type") {
    CHECK(vertex_type({11, 3}, {0, 1}) == VertexType{11, 3});
    CHECK(vertex_type({1, 0}, {0, 1}) == VertexType{1, 0});
    CHECK(vertex_type({11, 25}, {-1, 0}) == VertexType{25, 14});
    CHECK_THROWS_AS(vertex_type({2, 2}, {0, 1}), ValidationError);
    CHECK_THROWS_AS(vertex_type({0, 1}, {1, 0}), ValidationError);
}

TEST_CASE("vertex_type brute force against shear representatives") {
    // Oracle: any shear of the normalizing map gives the same (P, Q mod P).
    gen::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        LatticeVector v2{gen::uniform(rng, -9, 9), gen::uniform(rng, -9, 9)};
        if (!is_primitive(v2)) continue;
        LatticeVector v1{gen::uniform(rng, -30, 30), gen::uniform(rng, -30, 30)};
        if (!is_primitive(v1) || det(v1, v2) <= 0) continue;
        VertexType t = vertex_type(v1, v2);
        for (int k = 0; k < 10; ++k) {
            Mat2 shear{1, 0, gen::uniform(rng, -5, 5), 1};
            LatticeVector w = (shear * standard_form(v1, v2))(v1);
            CHECK(w.x == t.P);
            CHECK(mod_floor(w.y, t.P) == t.Q);
            // Renormalizing the input by a random unimodular map leaves the type unchanged.
            Mat2 U = Mat2{1, gen::uniform(rng, -3, 3), 0, 1} * Mat2{1, 0, gen::uniform(rng, -3, 3), 1};
            CHECK(vertex_type(U(v1), U(v2)) == t);
        }
    }
}

TEST_CASE("monodromy matrices") {
    CHECK(monodromy_matrix(CutSide::B1, 1, 0, 5, 3, 1) == Mat2{0, 1, -1, 2});
    CHECK(monodromy_matrix(CutSide::B1, 5, 3, 14, 9, 1) == Mat2{-9, 4, -25, 11});
    CHECK(monodromy_matrix(CutSide::B2, 2, 1, 1, 1, 3) == Mat2{3, -4, 1, -1});
    for (long p1 = 1; p1 <= 30; ++p1)
        for (long q1 = 0; q1 <= p1; ++q1)
            for (long c = 1; c <= 3; ++c) {
                Mat2 b1 = monodromy_matrix(CutSide::B1, p1, q1, 1, 1, c);
                CHECK(b1.det() == 1);
                CHECK(b1(LatticeVector{p1 - q1, p1}) == LatticeVector{p1 - q1, p1});
                Mat2 b2 = monodromy_matrix(CutSide::B2, 1, 0, p1, q1, c);
                CHECK(b2.det() == 1);
                CHECK(b2(LatticeVector{c * p1 - q1, p1}) == LatticeVector{c * p1 - q1, p1});
            }
}

TEST_CASE("resolution profile") {
    ResolutionProfile r = resolution_profile({5, 2});
    REQUIRE(r.edges.size() == 2);
    CHECK(r.edges[0].self_intersection == -3);
    CHECK(r.edges[1].self_intersection == -2);
    CHECK(r.vertices == std::vector<PlanePoint>{{0, 1}, {2, 1}, {5, 2}});
    CHECK(resolution_profile({4, 1}).chain == Chain{4});
    ResolutionProfile w = resolution_profile({25, 14});
    std::vector<std::int64_t> labels;
    for (const auto& e : w.edges) labels.push_back(e.self_intersection);
    CHECK(labels == std::vector<std::int64_t>{-2, -5, -3});
    CHECK_THROWS_AS(resolution_profile({1, 0}), ValidationError);
}

TEST_CASE("property: resolution labels are the HJ expansion") {
    int failures = 0;
    for (long P = 2; P <= 400; ++P)
        for (long Q = 1; Q < P; ++Q) {
            if (std::gcd(P, Q) != 1) continue;
            ResolutionProfile r = resolution_profile({P, Q});
            Chain c = cf_expand(make_rational(P, Q));
            if (r.edges.size() != c.size()) { ++failures; continue; }
            for (std::size_t i = 0; i < c.size(); ++i)
                if (r.edges[i].self_intersection != -c[i]) ++failures;
            // consecutive resolved directions form lattice bases
            for (std::size_t i = 0; i + 1 < r.edges.size(); ++i)
                if (det(r.edges[i].direction, r.edges[i + 1].direction) != 1) ++failures;
        }
    CHECK(failures == 0);
}

TEST_CASE("property: wedge vertices have the Wahl types") {
    int failures = 0;
    for (const auto& w : gen::all_wedges(12, {1, 2, 3})) {
        LatticeVector r1 = ray_direction(w, Side::Left), r2 = ray_direction(w, Side::Right);
        VertexType t1 = vertex_type({1, 0}, r1), t2 = vertex_type(r2, {-1, 0});
        VertexType e1 = w.p1 == 1 ? VertexType{1, 0} : VertexType{w.p1 * w.p1, w.p1 * w.q1 - 1};
        VertexType e2 = w.p2 == 1 ? VertexType{1, 0} : VertexType{w.p2 * w.p2, w.p2 * w.q2 - 1};
        if (!(t1 == e1) || !(t2 == e2)) ++failures;
    }
    CHECK(failures == 0);
}
