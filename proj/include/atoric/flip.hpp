#pragma once

#include "atoric/mori.hpp"
#include "atoric/mutate.hpp"

#include <optional>
#include <vector>

namespace atoric {

struct AntiflipResult {
    WedgeParams plus;
    WedgeParams minus; // c = 1
    BigInt delta_used;
    bool q1_adjusted; // smooth left vertex rewritten from (1,1) to (1,0)
};

AntiflipResult initial_antiflip(const WedgeParams& plus, const BigRational& a_minus);

struct AntiflipInBounds {
    AntiflipResult result;
    BigRational l1, l2;            // new bounds (l1 + a+, l2 - a-)
    Budget budget;                 // room left for the right-mutation orbit
    bool certified;                // budget verdict FitsForever
};

AntiflipInBounds antiflip_in_bounds(const WedgeParams& plus, const BigRational& l1, const BigRational& l2,
                                    const BigRational& a_minus, std::size_t budget_steps = 20);

struct FlipResult {
    enum class Kind { FlipTo, DivisorialContraction };
    Kind kind;
    std::optional<WedgeParams> plus;
    std::optional<MinusOneSphere> sphere;
    std::vector<WedgeParams> descent; // starts with the input, ends at the left-immutable wedge
};
const char* to_string(FlipResult::Kind k);

FlipResult flip(const WedgeParams& minus, const BigRational& a_plus);

struct CohomologyPath {
    BigInt delta;
    BigRational start;            // a+ p0 p1 = delta
    BigRational end;              // -a- p1 p2 of the antiflipped wedge
    BigRational affine_distance;  // start - end
    QuadraticSurd cap;            // C = l2 (1 - lambda_-^2)
    QuadraticSurd gap_high;       // delta + C p1 p2 (open end)
    bool in_window;               // delta < distance < delta + C p1 p2
};

CohomologyPath cohomology_path(const WedgeParams& plus, const BigRational& a_minus, const BigRational& l2);

} // namespace atoric
