#pragma once

#include "atoric/workbench/json_io.hpp"
#include "atoric/workbench/polynomial.hpp"

#include <string>
#include <vector>

namespace atoric {

// from_chain -> invariants -> antiflip (inside bounds) -> budget -> orbit -> cohomology -> flip back.
struct PipelineSpec {
    MarkedChain chain;
    BigRational a_plus, l1, l2, a_minus;
    BigInt delta;
    std::optional<WedgeParams> plus, minus;
    std::vector<BigInt> orbit_p, orbit_q; // right vertices along the orbit
    std::vector<BigInt> printed_q;        // compared as notes only
    std::optional<BigRational> cohomology_end, cohomology_distance;
};

struct Scenario {
    enum class Kind { Pipeline, Cp2, K1A, BranchCurve };
    std::string name;
    Kind kind;
    PipelineSpec pipeline;        // Kind::Pipeline
    Polynomial2V curve;           // Kind::BranchCurve
};

struct ScenarioCheck {
    enum class Status { Pass, Fail, Note };
    std::string stage, label, expected, actual;
    Status status;
};

struct ScenarioReport {
    std::string name;
    std::vector<ScenarioCheck> checks;
    bool ok() const; // no Fail
    std::string text() const;
    Json json() const;
};

const char* to_string(ScenarioCheck::Status s);

std::vector<std::string> builtin_scenario_names(); // quintic, godeaux, cp2, k1a, branch-curve
Scenario builtin_scenario(const std::string& name);
Scenario scenario_from_json(const Json& j);

ScenarioReport run_scenario(const Scenario& s);

// The triangle (0,0),(6,0),(0,6) with the three corner cuts meeting towards (2,2).
GeoPolygon cp2_triangle();

} // namespace atoric
