#include "atoric/errors.hpp"
#include "atoric/flip.hpp"
#include "support/gen.hpp"
#include "support/print.hpp"

#include <doctest.h>

using namespace atoric;

namespace {
BigRational q(long n, long d = 1) { return make_rational(n, d); }
} // namespace

TEST_CASE("initial antiflip") {
    AntiflipResult a = initial_antiflip(validate(2, 1, 1, 1, 3, q(3, 2)), q(1, 10));
    CHECK(a.minus == validate(1, 0, 5, 3, 1, q(1, 10)));
    CHECK(a.delta_used == 3);
    CHECK(a.q1_adjusted);
    AntiflipResult g = initial_antiflip(validate(4, 3, 5, 2, 1, q(7, 20)), q(1, 100));
    CHECK(g.minus == validate(5, 2, 39, 17, 1, q(1, 100)));
    CHECK(g.delta_used == 7);
    CHECK_FALSE(g.q1_adjusted);
    CHECK_THROWS_AS(initial_antiflip(validate(1, 0, 5, 3, 1, 1), 1), PreconditionError);
    CHECK_THROWS_AS(initial_antiflip(validate(2, 1, 1, 1, 3, 1), 0), ValidationError);
}

TEST_CASE("antiflip inside bounds") {
    AntiflipInBounds r = antiflip_in_bounds(validate(2, 1, 1, 1, 3, q(3, 2)), 1, 1, q(1, 10));
    CHECK(r.l1 == q(5, 2));
    CHECK(r.l2 == q(9, 10));
    CHECK(r.certified);
    CHECK(r.budget.verdict == Budget::Verdict::FitsForever);
    REQUIRE(r.budget.bound.has_value());
    CHECK(r.budget.bound->to_decimal(6) == "0.017082");

    try {
        antiflip_in_bounds(validate(2, 1, 1, 1, 3, q(3, 2)), 1, 1, 1);
        FAIL("expected no-room");
    } catch (const PreconditionError& e) {
        CHECK(e.code() == "no-room");
    }

    // Above the cap 0.854... but below l2.
    AntiflipInBounds u = antiflip_in_bounds(validate(2, 1, 1, 1, 3, q(3, 2)), 1, 1, q(9, 10));
    CHECK_FALSE(u.certified);
    CHECK(u.budget.verdict == Budget::Verdict::FitsUpTo);
    // The orbit only eats about 0.0827 a-, so the 1/10 left is enough for every computed step.
    CHECK(u.budget.fits == 20);
    CHECK(!u.budget.overflow_step);
    AntiflipInBounds v = antiflip_in_bounds(validate(2, 1, 1, 1, 3, q(3, 2)), 1, 1, q(19, 20));
    CHECK(v.budget.verdict == Budget::Verdict::Exceeds);
    CHECK(v.budget.fits == 0);
    CHECK(v.budget.overflow_step == std::size_t{1});
}

TEST_CASE("flip") {
    FlipResult a = flip(validate(5, 3, 14, 9, 1, 1), q(3, 2));
    CHECK(a.kind == FlipResult::Kind::FlipTo);
    CHECK(a.descent == std::vector<WedgeParams>{validate(5, 3, 14, 9, 1, 1), validate(1, 0, 5, 3, 1, 14)});
    CHECK(a.plus == validate(2, 1, 1, 1, 3, q(3, 2)));

    FlipResult g = flip(validate(5, 2, 39, 17, 1, q(1, 100)), q(7, 20));
    CHECK(g.descent.size() == 1);
    CHECK(g.plus == validate(4, 3, 5, 2, 1, q(7, 20)));

    FlipResult d = flip(validate(1, 0, 1, 1, 1, 2), 1);
    CHECK(d.kind == FlipResult::Kind::DivisorialContraction);
    REQUIRE(d.sphere.has_value());
    CHECK(d.sphere->edge == "R1");
    CHECK(!d.plus);

    CHECK_THROWS_AS(flip(validate(2, 1, 1, 1, 3, 1), 1), PreconditionError);
}

TEST_CASE("cohomology path") {
    CohomologyPath c = cohomology_path(validate(2, 1, 1, 1, 3, q(3, 2)), q(1, 10), 1);
    CHECK(c.delta == 3);
    CHECK(c.start == 3);
    CHECK(c.end == q(-1, 2));
    CHECK(c.affine_distance == q(7, 2));
    CHECK(c.cap == QuadraticSurd(q(-5, 2), q(3, 2), 5));
    CHECK(c.in_window);

    CohomologyPath g = cohomology_path(validate(4, 3, 5, 2, 1, q(7, 20)), q(1, 100), 1);
    CHECK(g.start == 7);
    CHECK(g.end == q(-39, 20));
    CHECK(g.affine_distance == 7 + q(39, 20));
    CHECK(g.in_window);

    try {
        cohomology_path(validate(2, 1, 1, 1, 3, 1), q(1, 10), 1);
        FAIL("expected an error");
    } catch (const PreconditionError& e) {
        CHECK(e.code() == "not-canonically-normalized");
    }
}

TEST_CASE("property: antiflip preserves Delta and Omega and negates sigma") {
    int count = 0;
    for (const auto& w : gen::all_wedges(15, {1, 2, 3})) {
        if (sigma(w) <= 0) continue;
        ++count;
        AntiflipResult r = initial_antiflip(w, 1);
        WedgeInvariants a = invariants(w), b = invariants(r.minus);
        REQUIRE(b.Delta == a.Delta);
        REQUIRE(b.Omega == a.Omega);
        REQUIRE(b.sigma == -a.sigma);
        REQUIRE(classify(r.minus, Side::Left).status != MutabilityStatus::Mutable);
    }
    CHECK(count > 5000);
}

TEST_CASE("property: flip undoes the antiflip") {
    gen::Rng rng(42);
    int count = 0;
    while (count < 200) {
        WedgeParams w = gen::random_wedge(rng, 25, 1, 4);
        if (sigma(w) <= 0) continue;
        ++count;
        AntiflipResult r = initial_antiflip(w, make_rational(1, gen::uniform(rng, 2, 50)));
        FlipResult f = flip(r.minus, w.a);
        REQUIRE(f.kind == FlipResult::Kind::FlipTo);
        CHECK(f.plus == w);
    }
}
