#include "atoric/workbench/scenario.hpp"

#include "atoric/errors.hpp"

#include <algorithm>

namespace atoric {

namespace {

const char* quintic_json = R"json({
  "name": "quintic", "kind": "pipeline",
  "chain": "[4]-3-[]", "aPlus": "3/2", "l1": "1", "l2": "1", "aMinus": "1/10",
  "expect": {
    "delta": "3",
    "plus": "Pi(2,1,1,1,3,3/2)",
    "minus": "Pi(1,0,5,3,1,1/10)",
    "orbitP": ["5", "14", "37", "97", "254"],
    "orbitQ": ["3", "9", "24", "63", "165"],
    "cohomology": {"end": "-1/2", "distance": "7/2"}
  }
})json";

// Printed q-values after (39,17) are 49, 326, 2233; the recursion gives 117, 802, 5497.
const char* godeaux_json = R"json({
  "name": "godeaux", "kind": "pipeline",
  "chain": "[2,2,6]-1-[3,5,2]", "aPlus": "7/20", "l1": "1", "l2": "1", "aMinus": "1/100",
  "expect": {
    "delta": "7",
    "plus": "Pi(4,3,5,2,1,7/20)",
    "minus": "Pi(5,2,39,17,1,1/100)",
    "orbitP": ["39", "268", "1837", "12591"],
    "orbitQ": ["17", "117", "802", "5497"],
    "printedQ": ["17", "49", "326", "2233"],
    "cohomology": {"end": "-39/20", "distance": "179/20"}
  }
})json";

std::vector<BigInt> int_list(const Json& j, const char* key) {
    std::vector<BigInt> out;
    if (!j.contains(key)) return out;
    for (const auto& v : j.at(key)) out.push_back(v.is_string() ? parse_int(v.get<std::string>()) : BigInt(v.get<long>()));
    return out;
}

struct Recorder {
    ScenarioReport& r;
    std::string stage;

    bool check(const std::string& label, const std::string& expected, const std::string& actual) {
        bool ok = expected == actual;
        r.checks.push_back({stage, label, expected, actual, ok ? ScenarioCheck::Status::Pass : ScenarioCheck::Status::Fail});
        return ok;
    }
    bool holds(const std::string& label, bool ok, const std::string& detail) {
        r.checks.push_back({stage, label, "true", ok ? "true" : "false (" + detail + ")",
                            ok ? ScenarioCheck::Status::Pass : ScenarioCheck::Status::Fail});
        return ok;
    }
    void note(const std::string& label, const std::string& expected, const std::string& actual) {
        r.checks.push_back({stage, label, expected, actual,
                            expected == actual ? ScenarioCheck::Status::Pass : ScenarioCheck::Status::Note});
    }
    void fail(const std::string& what) { r.checks.push_back({stage, "error", "no error", what, ScenarioCheck::Status::Fail}); }
};

bool same_cycle(std::vector<PlanePoint> a, const std::vector<PlanePoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return a.empty();
}

std::string points(const std::vector<PlanePoint>& ps) {
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : " ") + to_string(p);
    return s;
}

void run_pipeline(const PipelineSpec& p, ScenarioReport& report) {
    Recorder rec{report, "chain"};
    try {
        WedgeParams plus = from_chain(p.chain, p.a_plus);
        if (p.plus) rec.check("plus", to_string(*p.plus), to_string(plus));

        rec.stage = "invariants";
        WedgeInvariants inv = invariants(plus);
        if (!rec.check("sigma", rat(p.delta), rat(inv.sigma))) return;
        rec.check("K-sign", "KPositive", to_string(inv.k));

        rec.stage = "antiflip";
        AntiflipCap cap = max_antiflip_param(p.l2, inv.sigma);
        rec.holds("a- below cap " + cap.exact.to_decimal(6), p.a_minus <= cap.under, "a- = " + rat(p.a_minus));
        AntiflipInBounds af = antiflip_in_bounds(plus, p.l1, p.l2, p.a_minus);
        const WedgeParams& minus = af.result.minus;
        if (p.minus && !rec.check("minus", to_string(*p.minus), to_string(minus))) return;
        rec.check("bounds", rat(p.l1 + plus.a) + "," + rat(p.l2 - p.a_minus), rat(af.l1) + "," + rat(af.l2));
        rec.check("Delta preserved", rat(inv.Delta), rat(invariants(minus).Delta));
        rec.check("Omega preserved", rat(inv.Omega), rat(invariants(minus).Omega));

        rec.stage = "budget";
        rec.check("verdict", "FitsForever", to_string(af.budget.verdict));
        rec.holds("room left exceeds " + (af.budget.bound ? af.budget.bound->to_decimal(12) : std::string("bound")),
                  af.certified, "l2 - a- = " + rat(af.l2));

        rec.stage = "orbit";
        std::size_t steps = p.orbit_p.empty() ? 0 : p.orbit_p.size() - 1;
        std::vector<WedgeParams> orbit = mutation_orbit(minus, steps);
        for (std::size_t k = 0; k < p.orbit_p.size(); ++k)
            rec.check("p[" + std::to_string(k) + "]", rat(p.orbit_p[k]), rat(orbit[k].p2));
        for (std::size_t k = 0; k < p.orbit_q.size() && k < orbit.size(); ++k)
            rec.check("q[" + std::to_string(k) + "]", rat(p.orbit_q[k]), rat(orbit[k].q2));
        for (std::size_t k = 0; k < p.printed_q.size() && k < orbit.size(); ++k)
            rec.note("printed q[" + std::to_string(k) + "]", rat(p.printed_q[k]), rat(orbit[k].q2));
        bool steady = true;
        for (const auto& w : orbit) {
            WedgeInvariants x = invariants(w);
            steady = steady && x.Delta == inv.Delta && x.Omega == inv.Omega && x.sigma == -inv.sigma;
        }
        rec.holds("Delta, Omega, sigma constant", steady, "changed along the orbit");

        if (p.cohomology_end) {
            rec.stage = "cohomology";
            CohomologyPath c = cohomology_path(plus, p.a_minus, p.l2);
            rec.check("start", rat(p.delta), rat(c.start));
            rec.check("end", rat(*p.cohomology_end), rat(c.end));
            if (p.cohomology_distance) rec.check("distance", rat(*p.cohomology_distance), rat(c.affine_distance));
            rec.holds("inside gap window", c.in_window, "above " + c.gap_high.to_decimal(6));
        }

        rec.stage = "flip";
        FlipResult f = flip(minus, plus.a);
        rec.check("kind", "FlipTo", to_string(f.kind));
        if (f.plus) rec.check("plus", to_string(plus), to_string(*f.plus));
    } catch (const Error& e) {
        rec.fail(e.what());
    }
}

void run_cp2(ScenarioReport& report) {
    Recorder rec{report, "triangle"};
    try {
        GeoPolygon g = cp2_triangle();
        rec.check("cut monodromy", "[[0,1],[-1,2]]", to_string(g.cuts[0].monodromy.matrix()));
        rec.stage = "mutate";
        GeoPolygon m = geometric_mutate(g, 0);
        std::vector<PlanePoint> expected{{0, 6}, {0, -6}, {3, 3}};
        rec.holds("vertices", same_cycle(m.vertices, expected), points(m.vertices));
        rec.check("reversed cut monodromy", to_string(Mat2{0, 1, -1, 2}.inverse()), to_string(m.cuts[0].monodromy.matrix()));
        rec.check("reversed cut base", to_string(PlanePoint{3, 3}), to_string(m.cuts[0].base));
        rec.stage = "mutate back";
        GeoPolygon back = geometric_mutate(m, 0);
        rec.holds("vertices", same_cycle(back.vertices, g.vertices), points(back.vertices));
        rec.check("cuts", to_string(GeoPolygon{{}, {}, g.cuts}), to_string(GeoPolygon{{}, {}, back.cuts}));
    } catch (const Error& e) {
        rec.fail(e.what());
    }
}

void run_k1a(ScenarioReport& report) {
    Recorder rec{report, "k1a"};
    try {
        K1AReport k = k1a_parallelism(validate(5, 3, 14, 9, 1, 1));
        rec.check("cut direction", "(2,5)", to_string(k.cut));
        rec.check("vertex type", "(196,125)", "(" + rat(k.vertex.P) + "," + rat(k.vertex.Q) + ")");
        if (rec.holds("parallel edge found", k.match.has_value(), "no resolved edge is parallel")) {
            rec.check("edge number", "3", std::to_string(k.match->index + 1));
            rec.check("self-intersection", "-2", std::to_string(k.match->self_intersection));
        }
        K1AReport g = k1a_parallelism(validate(4, 3, 5, 2, 1, 1));
        rec.holds("no parallel edge for Pi(4,3,5,2,1,1)", !g.match.has_value(), "unexpected match");
    } catch (const Error& e) {
        rec.fail(e.what());
    }
}

void run_branch_curve(const Polynomial2V& f, ScenarioReport& report) {
    Recorder rec{report, "branch-curve"};
    BranchCurveReport b = verify_branch_curve(f);
    for (const auto& c : b.checks) {
        rec.stage = c.name;
        rec.holds("restriction is a square", c.root.has_value(), to_string(c.restriction, c.var));
        rec.check("root", to_string(c.expected_root, c.var), c.root ? to_string(*c.root, c.var) : "none");
        rec.holds("root squarefree", c.squarefree_root, "repeated factor");
    }
}

} // namespace

const char* to_string(ScenarioCheck::Status s) {
    switch (s) {
    case ScenarioCheck::Status::Pass: return "PASS";
    case ScenarioCheck::Status::Fail: return "FAIL";
    case ScenarioCheck::Status::Note: return "NOTE";
    }
    return "?";
}

bool ScenarioReport::ok() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const ScenarioCheck& c) { return c.status == ScenarioCheck::Status::Fail; });
}

std::string ScenarioReport::text() const {
    std::string s = "scenario " + name + "\n";
    for (const auto& c : checks) {
        s += std::string(to_string(c.status)) + "  " + c.stage + ": " + c.label;
        if (c.status == ScenarioCheck::Status::Pass) s += " = " + c.actual + "\n";
        else s += ": expected " + c.expected + ", got " + c.actual + "\n";
    }
    s += ok() ? "result PASS\n" : "result FAIL\n";
    return s;
}

Json ScenarioReport::json() const {
    Json list = Json::array();
    for (const auto& c : checks)
        list.push_back({{"status", to_string(c.status)},
                        {"stage", c.stage},
                        {"label", c.label},
                        {"expected", c.expected},
                        {"actual", c.actual}});
    return {{"name", name}, {"result", ok() ? "PASS" : "FAIL"}, {"checks", list}};
}

std::vector<std::string> builtin_scenario_names() { return {"quintic", "godeaux", "cp2", "k1a", "branch-curve"}; }

Scenario builtin_scenario(const std::string& name) {
    if (name == "quintic") return scenario_from_json(Json::parse(quintic_json));
    if (name == "godeaux") return scenario_from_json(Json::parse(godeaux_json));
    if (name == "cp2") return Scenario{name, Scenario::Kind::Cp2, {}, {}};
    if (name == "k1a") return Scenario{name, Scenario::Kind::K1A, {}, {}};
    if (name == "branch-curve") return Scenario{name, Scenario::Kind::BranchCurve, {}, branch_curve_fixture()};
    throw ValidationError("unknown-scenario", "no scenario named " + name);
}

Scenario scenario_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("bad-scenario", "a scenario is a JSON object");
    std::string name = j.value("name", std::string("unnamed"));
    std::string kind = j.value("kind", std::string("pipeline"));
    if (kind != "pipeline") {
        Scenario s = builtin_scenario(kind);
        s.name = name;
        return s;
    }
    PipelineSpec p;
    if (!j.contains("chain")) throw ValidationError("missing-field", "missing field chain");
    p.chain = marked_chain_from_json(j.at("chain"));
    p.a_plus = rational_field(j, "aPlus");
    p.l1 = rational_field(j, "l1");
    p.l2 = rational_field(j, "l2");
    p.a_minus = rational_field(j, "aMinus");
    if (!j.contains("expect")) throw ValidationError("missing-field", "missing field expect");
    const Json& e = j.at("expect");
    p.delta = int_field(e, "delta");
    if (e.contains("plus")) p.plus = wedge_from_json(e.at("plus"));
    if (e.contains("minus")) p.minus = wedge_from_json(e.at("minus"));
    p.orbit_p = int_list(e, "orbitP");
    p.orbit_q = int_list(e, "orbitQ");
    p.printed_q = int_list(e, "printedQ");
    if (e.contains("cohomology")) {
        p.cohomology_end = rational_field(e.at("cohomology"), "end");
        p.cohomology_distance = optional_rational(e.at("cohomology"), "distance");
    }
    return Scenario{name, Scenario::Kind::Pipeline, std::move(p), {}};
}

ScenarioReport run_scenario(const Scenario& s) {
    ScenarioReport r{s.name, {}};
    switch (s.kind) {
    case Scenario::Kind::Pipeline: run_pipeline(s.pipeline, r); break;
    case Scenario::Kind::Cp2: run_cp2(r); break;
    case Scenario::Kind::K1A: run_k1a(r); break;
    case Scenario::Kind::BranchCurve: run_branch_curve(s.curve, r); break;
    }
    return r;
}

GeoPolygon cp2_triangle() {
    GeoPolygon g;
    g.vertices = {{0, 0}, {6, 0}, {0, 6}};
    g.cuts = {nodal_trade_cut({0, 0}, {1, 0}, {0, 1}, 2), nodal_trade_cut({6, 0}, {-1, 1}, {-1, 0}, 1),
              nodal_trade_cut({0, 6}, {0, -1}, {1, -1}, 1)};
    return g;
}

} // namespace atoric
