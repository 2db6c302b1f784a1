#pragma once

#include "atoric/errors.hpp"
#include "atoric/wedge.hpp"

#include <optional>

namespace atoric {

enum class MutabilityStatus { Mutable, Borderline, Immutable };
const char* to_string(MutabilityStatus s);

// Exactly one of intersection / parallel_direction / separation is set, by status.
struct Mutability {
    Side side;
    MutabilityStatus status;
    BigInt delta;     // -sigma
    BigInt criterion; // delta*p2 - p1 (right) or delta*p1 - p2 (left); meaningful when c = 1
    std::optional<PlanePoint> intersection;       // where the cut's line meets the far ray
    std::optional<LatticeVector> parallel_direction;
    struct Separation {
        BigInt cross;                   // det(cut direction, far ray direction)
        std::optional<BigRational> cut_param, ray_param; // line meeting parameters (some <= 0)
    };
    std::optional<Separation> separation;
};

class NotMutable : public PreconditionError {
public:
    explicit NotMutable(Mutability witness);
    const Mutability& witness() const { return witness_; }

private:
    Mutability witness_;
};

// delta = -sigma; equals p1 q2 - p2 q1 when c = 1.
BigInt mutation_delta(const WedgeParams& w);

Mutability classify(const WedgeParams& w, Side side);
WedgeParams mutate(const WedgeParams& w, Side side);

// Cuts the polygon along the full line of cut `cut_index`, moves the side away from
// the coorientation by the monodromy (about the terminus), and reverses the cut.
GeoPolygon geometric_mutate(const GeoPolygon& poly, std::size_t cut_index);
// realize, mutate at B1 (right) or B2 (left), renormalize.
GeoPolygon geometric_mutate_wedge(const WedgeParams& w, Side side, const TerminusPolicy& policy = {});

struct MinusOneSphere {
    Side side;                // Right: from z2 to R1; Left: from z1 to R2
    PlanePoint from;          // focus-focus terminus
    LatticeVector direction;  // along E, pointing at the target edge
    LatticeVector parallel;   // common direction of the cut and the target edge
    PlanePoint hit;           // landing point on the target edge
    std::string edge;         // "R1" or "R2"
};

MinusOneSphere minus_one_sphere(const WedgeParams& w, Side side, const TerminusPolicy& policy = {});

} // namespace atoric
