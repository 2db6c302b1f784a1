#include <functional>
#include "atoric/errors.hpp"
#include "atoric/hjchain.hpp"
#include "support/gen.hpp"
#include "support/print.hpp"

#include <doctest.h>

using namespace atoric;

namespace {
using K = Move::Kind;

// The printed list starts after one prose move ([4,3] -> [1,5,3]).
MoveScript golden_script() {
    return {
        {K::BlowUp, 0, Chain{1, 5, 3}},
        {K::BlowUp, 0, Chain{1, 2, 5, 3}},
        {K::BlowDown, 0, Chain{1, 5, 3}},
        {K::BlowUp, 1, Chain{2, 1, 6, 3}},
        {K::BlowUp, 2, Chain{2, 2, 1, 7, 3}},
        {K::BlowUp, 2, Chain{2, 3, 1, 2, 7, 3}},
        {K::BlowUp, 2, Chain{2, 4, 1, 2, 2, 7, 3}},
        {K::BlowUp, 2, Chain{2, 5, 1, 2, 2, 2, 7, 3}},
        {K::BlowUp, 3, Chain{2, 5, 2, 1, 3, 2, 2, 7, 3}},
        {K::BlowUp, 3, Chain{2, 5, 3, 1, 2, 3, 2, 2, 7, 3}},
    };
}

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        if (auto* v = dynamic_cast<const ValidationError*>(&e)) return v->code();
        if (auto* p = dynamic_cast<const PreconditionError*>(&e)) return p->code();
        return "other";
    }
    return "";
}
} // namespace

TEST_CASE("moves") {
    CHECK(blowup({4, 3}, 0) == Chain{1, 5, 3});
    CHECK(blowup({1, 5, 3}, 1) == Chain{2, 1, 6, 3});
    CHECK(blowup({}, 0) == Chain{1});
    CHECK(blowup({4, 3}, 2) == Chain{4, 4, 1});
    CHECK(blowdown({1, 2, 5, 3}, 0) == Chain{1, 5, 3});
    CHECK(blowdown({2, 1, 6, 3}, 1) == Chain{1, 5, 3});
    CHECK(blowdown({1}, 0) == Chain{});
    CHECK(error_code([] { blowdown({2, 2}, 0); }) != "");
    CHECK(error_code([] { blowup({2, 2}, 3); }) != "");
    CHECK(error_code([] { blowdown({2, 2}, 2); }) != "");
}

TEST_CASE("golden replay") {
    MoveScript s = golden_script();
    CHECK(s.size() == 10);
    CHECK(replay({4, 3}, s) == Chain{2, 5, 3, 1, 2, 3, 2, 2, 7, 3});
    CHECK(replay({4, 3}, {}) == Chain{4, 3});

    MoveScript bad = s;
    bad[4].expected = Chain{2, 2, 1, 7, 4};
    try {
        replay({4, 3}, bad);
        FAIL("expected a mismatch");
    } catch (const PreconditionError& e) {
        CHECK(e.code() == "snapshot-mismatch");
        CHECK(std::string(e.what()).find("step 5") != std::string::npos);
    }
    MoveScript illegal = {{K::BlowDown, 0, std::nullopt}};
    CHECK(error_code([&] { replay({4, 3}, illegal); }) == "script-step");
}

TEST_CASE("wahl splits") {
    auto a = find_wahl_splits({2, 5, 3, 1, 2, 3, 2, 2, 7, 3});
    REQUIRE(a.size() == 1);
    CHECK(a[0].chain == MarkedChain{{2, 5, 3}, 1, {2, 3, 2, 2, 7, 3}});
    CHECK(a[0].left == WahlPair{5, 3});
    CHECK(a[0].right == WahlPair{14, 9});

    auto g = find_wahl_splits({2, 2, 6, 1, 3, 5, 2});
    REQUIRE(g.size() == 1);
    CHECK(g[0].left == WahlPair{4, 3});
    CHECK(g[0].right == WahlPair{5, 2});
    CHECK(find_wahl_splits({2, 2}).empty());

    // Same Delta and Omega as the wedge the pipeline started from.
    WedgeParams w = from_chain(a[0].chain, 1);
    CHECK(invariants(w).Delta == 11);
    CHECK(invariants(w).Omega == 3);
}

TEST_CASE("k1A parallelism") {
    K1AReport r = k1a_parallelism(validate(5, 3, 14, 9, 1, 1));
    CHECK(r.cut == LatticeVector{2, 5});
    CHECK(r.vertex == VertexType{196, 125});
    REQUIRE(r.match.has_value());
    CHECK(r.match->index == 2);
    CHECK(r.match->self_intersection == -2);
    CHECK(parallel(r.match->direction, r.cut));

    CHECK_FALSE(k1a_parallelism(validate(4, 3, 5, 2, 1, 1)).match.has_value());
    K1AReport s = k1a_parallelism(validate(2, 1, 1, 1, 3, 1));
    CHECK(s.edges.empty());
    CHECK_FALSE(s.match.has_value());
}

TEST_CASE("property: blowdown undoes blowup") {
    gen::Rng rng(5);
    for (int i = 0; i < 3000; ++i) {
        Chain c = gen::random_chain(rng, 10, 1, 9);
        for (std::size_t pos = 0; pos <= c.size(); ++pos) CHECK(blowdown(blowup(c, pos), pos) == c);
    }
}

TEST_CASE("property: splits recover the wedge") {
    for (const auto& w : gen::all_wedges(10, {1, 2, 3})) {
        if (w.p1 == 1 || w.p2 == 1) continue;
        MarkedChain m = boundary_chain(w);
        auto splits = find_wahl_splits(m.concatenated());
        bool found = false;
        for (const auto& s : splits)
            if (s.chain == m && s.left == WahlPair{w.p1, w.q1} && s.right == WahlPair{w.p2, w.q2}) found = true;
        CHECK(found);
    }
}
