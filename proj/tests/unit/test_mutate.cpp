#include "atoric/errors.hpp"
#include "atoric/mutate.hpp"
#include "support/gen.hpp"
#include "support/print.hpp"

#include <algorithm>
#include <doctest.h>

using namespace atoric;

namespace {
BigRational q(long n, long d = 1) { return make_rational(n, d); }

GeoPolygon cp2_triangle() {
    GeoPolygon g;
    g.vertices = {{0, 0}, {6, 0}, {0, 6}};
    g.cuts = {nodal_trade_cut({0, 0}, {1, 0}, {0, 1}, 2), nodal_trade_cut({6, 0}, {-1, 1}, {-1, 0}, 1),
              nodal_trade_cut({0, 6}, {0, -1}, {1, -1}, 1)};
    return g;
}

// Same cyclic sequence of vertices, any starting point.
bool same_cycle(std::vector<PlanePoint> a, const std::vector<PlanePoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
}
} // namespace

TEST_CASE("classify") {
    CHECK(classify(validate(2, 1, 1, 1, 3, 1), Side::Right).status == MutabilityStatus::Immutable);
    CHECK(classify(validate(2, 1, 1, 1, 3, 1), Side::Right).separation.has_value());

    Mutability m = classify(validate(1, 0, 5, 3, 1, 1), Side::Right);
    CHECK(m.status == MutabilityStatus::Mutable);
    CHECK(m.delta == 3);
    CHECK(m.criterion == 14);
    REQUIRE(m.intersection.has_value());
    // B1 line (1,1) meets R2 = (1,0) + t(11,25) at t = 1/14.
    CHECK(*m.intersection == PlanePoint{q(25, 14), q(25, 14)});

    Mutability b = classify(validate(1, 0, 1, 1, 1, 1), Side::Right);
    CHECK(b.status == MutabilityStatus::Borderline);
    CHECK(b.criterion == 0);
    CHECK(b.parallel_direction == LatticeVector{1, 1});
    CHECK(classify(validate(1, 0, 1, 1, 1, 1), Side::Left).status == MutabilityStatus::Borderline);
    CHECK(classify(validate(1, 0, 5, 3, 1, 1), Side::Left).status == MutabilityStatus::Immutable);
}

TEST_CASE("mutate") {
    CHECK(mutate(validate(1, 0, 5, 3, 1, 1), Side::Right) == validate(5, 3, 14, 9, 1, q(1, 14)));
    CHECK(mutate(validate(5, 3, 14, 9, 1, 1), Side::Right) == validate(14, 9, 37, 24, 1, q(5, 37)));
    CHECK(mutate(validate(5, 3, 14, 9, 1, 1), Side::Left) == validate(1, 0, 5, 3, 1, 14));
    CHECK(mutate(validate(5, 3, 14, 9, 1, q(1, 14)), Side::Left) == validate(1, 0, 5, 3, 1, 1));
    try {
        mutate(validate(2, 1, 1, 1, 3, 1), Side::Right);
        FAIL("expected NotMutable");
    } catch (const NotMutable& e) {
        CHECK(e.code() == "not-mutable");
        CHECK(e.witness().status == MutabilityStatus::Immutable);
    }
    CHECK_THROWS_AS(mutate(validate(1, 0, 1, 1, 1, 1), Side::Right), NotMutable);
}

TEST_CASE("mirror swaps the sides") {
    WedgeParams w = validate(1, 0, 5, 3, 1, 1);
    CHECK(mirror(w) == validate(5, 2, 1, 1, 1, 1));
    CHECK(classify(mirror(w), Side::Left).status == MutabilityStatus::Mutable);
    CHECK(mutate(mirror(w), Side::Left) == mirror(mutate(w, Side::Right)));
}

TEST_CASE("geometric mutation of the triangle") {
    GeoPolygon g = cp2_triangle();
    CHECK(g.cuts[0].monodromy.matrix() == Mat2{0, 1, -1, 2});
    CHECK(g.cuts[0].direction == LatticeVector{1, 1});
    CHECK(g.cuts[0].terminus == PlanePoint{2, 2});

    GeoPolygon m = geometric_mutate(g, 0);
    CHECK(same_cycle(m.vertices, {{0, 6}, {0, -6}, {3, 3}}));
    REQUIRE(m.cuts.size() == 3);
    CHECK(m.cuts[0].base == PlanePoint{3, 3});
    CHECK(m.cuts[0].direction == LatticeVector{-1, -1});
    CHECK(m.cuts[0].monodromy.matrix() == Mat2{2, -1, 1, 0});
    // The cut at (6,0) moved with its side; the one at (0,6) did not.
    CHECK(m.cuts[1].base == PlanePoint{0, -6});
    CHECK(m.cuts[2] == g.cuts[2]);

    GeoPolygon back = geometric_mutate(m, 0);
    CHECK(same_cycle(back.vertices, g.vertices));
    CHECK(back.cuts[0].base == PlanePoint{0, 0});
    CHECK(back.cuts[0].direction == LatticeVector{1, 1});
    CHECK(back.cuts[0].monodromy.matrix() == Mat2{0, 1, -1, 2});
    CHECK(back.cuts[1] == g.cuts[1]);
}

TEST_CASE("geometric mutation of a wedge") {
    WedgeParams w = validate(1, 0, 5, 3, 1, 1);
    GeoPolygon geo = geometric_mutate_wedge(w, Side::Right);
    auto diff = shape_difference(geo, realize(validate(5, 3, 14, 9, 1, q(1, 14))));
    CHECK_MESSAGE(!diff, *diff);
    GeoPolygon raw = geometric_mutate(realize(w), 0);
    REQUIRE(raw.rays.size() == 2);
    CHECK(raw.vertices.size() == 2);
    CHECK(geometric_mutate(raw, 0).vertices == realize(w).vertices);
}

TEST_CASE("minus one sphere") {
    MinusOneSphere s = minus_one_sphere(validate(1, 0, 1, 1, 1, 3), Side::Right);
    CHECK(s.edge == "R1");
    CHECK(s.from == PlanePoint{3, 1});
    CHECK(s.direction == LatticeVector{-1, 0});
    CHECK(s.parallel == LatticeVector{0, 1});
    CHECK(s.hit == PlanePoint{0, 1});
    CHECK(cross(to_point(s.parallel), to_point(ray_direction(validate(1, 0, 1, 1, 1, 3), Side::Left))) == 0);

    MinusOneSphere t = minus_one_sphere(validate(1, 0, 1, 1, 1, 3), Side::Left);
    CHECK(t.edge == "R2");
    CHECK(t.parallel == LatticeVector{1, 1});
    CHECK(t.from == PlanePoint{1, 1});
    CHECK(t.direction == LatticeVector{1, 0});
    CHECK(t.hit == PlanePoint{4, 1});

    try {
        minus_one_sphere(validate(1, 0, 5, 3, 1, 1), Side::Right);
        FAIL("expected an error");
    } catch (const PreconditionError& e) {
        CHECK(e.code() == "not-borderline");
    }
}

TEST_CASE("property: arithmetic and geometric classification agree") {
    // classify throws InternalError on any disagreement.
    int mutable_count = 0, borderline = 0;
    for (const auto& w : gen::all_wedges(12, {1, 2})) {
        for (Side s : {Side::Left, Side::Right}) {
            Mutability m = classify(w, s);
            mutable_count += m.status == MutabilityStatus::Mutable;
            borderline += m.status == MutabilityStatus::Borderline;
            if (m.status == MutabilityStatus::Borderline) CHECK(m.parallel_direction.has_value());
        }
    }
    CHECK(mutable_count > 100);
    CHECK(borderline > 0);
}

TEST_CASE("property: geometric mutation matches the parametric one for p <= 12") {
    int checked = 0, failures = 0;
    for (const auto& w : gen::all_wedges(12, {1})) {
        for (Side s : {Side::Right, Side::Left}) {
            if (classify(w, s).status != MutabilityStatus::Mutable) continue;
            ++checked;
            WedgeParams m = mutate(w, s);
            auto diff = shape_difference(geometric_mutate_wedge(w, s), realize(m));
            if (diff) {
                if (++failures < 5) MESSAGE(to_string(w), " ", to_string(s), ": ", *diff);
            }
            // New vertex type read off the raw mutated polygon.
            GeoPolygon raw = geometric_mutate(realize(w), s == Side::Right ? 0 : 1);
            LatticeVector e = primitive(raw.vertices[1] - raw.vertices[0]);
            VertexType t = s == Side::Right ? vertex_type(raw.rays[1], -e) : vertex_type(e, raw.rays[0]);
            BigInt p = s == Side::Right ? m.p2 : m.p1, qq = s == Side::Right ? m.q2 : m.q1;
            CHECK(t == VertexType{p * p, mod_floor(p * qq - 1, p * p)});
        }
    }
    CHECK(checked == 230);
    CHECK(failures == 0);
}

TEST_CASE("property: right then left is the identity") {
    for (const auto& w : gen::all_wedges(12, {1})) {
        if (classify(w, Side::Right).status == MutabilityStatus::Mutable)
            CHECK(mutate(mutate(w, Side::Right), Side::Left) == w);
        if (classify(w, Side::Left).status == MutabilityStatus::Mutable)
            CHECK(mutate(mutate(w, Side::Left), Side::Right) == w);
    }
}

TEST_CASE("property: invariants along random 10-step orbits") {
    gen::Rng rng(20261016);
    int orbits = 0;
    while (orbits < 600) {
        WedgeParams w = gen::random_wedge(rng, 30, 1, 1);
        bool r = classify(w, Side::Right).status == MutabilityStatus::Mutable;
        bool l = classify(w, Side::Left).status == MutabilityStatus::Mutable;
        if (!r && !l) continue;
        ++orbits;
        WedgeInvariants base = invariants(w);
        WedgeParams cur = w;
        for (int step = 0; step < 10; ++step) {
            std::vector<Side> options;
            for (Side s : {Side::Left, Side::Right})
                if (classify(cur, s).status == MutabilityStatus::Mutable) options.push_back(s);
            if (options.empty()) break;
            cur = mutate(cur, options[gen::uniform(rng, 0, int(options.size()) - 1)]);
            WedgeInvariants inv = invariants(cur);
            REQUIRE(inv.sigma == base.sigma);
            REQUIRE(inv.Delta == base.Delta);
            REQUIRE(inv.Omega == base.Omega);
        }
    }
    CHECK(orbits == 600);
}
