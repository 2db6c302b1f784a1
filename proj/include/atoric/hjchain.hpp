#pragma once

#include "atoric/continued_fraction.hpp"
#include "atoric/wedge.hpp"

#include <optional>
#include <vector>

namespace atoric {

struct Move {
    enum class Kind { BlowUp, BlowDown };
    Kind kind;
    std::size_t at;
    std::optional<Chain> expected;
};

using MoveScript = std::vector<Move>;

Chain blowup(const Chain& chain, std::size_t position);
Chain blowdown(const Chain& chain, std::size_t index);

// Throws PreconditionError("script-step") / ("snapshot-mismatch") naming the 1-based step.
Chain replay(const Chain& start, const MoveScript& script);

struct WahlSplit {
    MarkedChain chain;
    WahlPair left, right;
};
std::vector<WahlSplit> find_wahl_splits(const Chain& chain);

struct ParallelEdge {
    std::size_t index; // 0-based among the resolved edges of the right vertex
    LatticeVector direction;
    std::int64_t self_intersection;
};

struct K1AReport {
    LatticeVector cut;                 // B1 direction
    VertexType vertex;                 // type of x2
    std::vector<ResolvedEdge> edges;   // resolved edges of x2, anticlockwise from E
    std::optional<ParallelEdge> match;
};
K1AReport k1a_parallelism(const WedgeParams& w);

} // namespace atoric
