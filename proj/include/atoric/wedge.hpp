#pragma once

#include "atoric/continued_fraction.hpp"
#include "atoric/polygon.hpp"

#include <optional>

namespace atoric {

enum class Side { Left, Right };
enum class KSign { KPositive, KNegative, KZero };

const char* to_string(Side s);
const char* to_string(KSign k);
Side parse_side(std::string_view text);
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct WedgeParams {
    BigInt p1, q1, p2, q2, c;
    BigRational a;
    friend bool operator==(const WedgeParams&, const WedgeParams&) = default;
};

struct WedgeInvariants {
    BigInt sigma, Delta, Omega, shear;
    KSign k;
    friend bool operator==(const WedgeInvariants&, const WedgeInvariants&) = default;
};

// Error codes: nonpositive-length, left-out-of-range, left-smooth-convention,
// left-not-coprime, right-*, rays-intersect.
WedgeParams validate(const BigInt& p1, const BigInt& q1, const BigInt& p2, const BigInt& q2, const BigInt& c,
                     const BigRational& a);
inline WedgeParams validate(const WedgeParams& w) { return validate(w.p1, w.q1, w.p2, w.q2, w.c, w.a); }

BigInt sigma(const WedgeParams& w);
WedgeInvariants invariants(const WedgeParams& w);

LatticeVector ray_direction(const WedgeParams& w, Side side);   // R1, R2
LatticeVector cut_direction(const WedgeParams& w, CutSide side); // B1, B2
ZAffineMap monodromy(CutSide side, const WedgeParams& w);
LatticeVector cut_coorientation(const WedgeParams& w, CutSide side);

struct TerminusPolicy {
    BigRational fraction = BigRational(1, 3);
};

GeoPolygon realize(const WedgeParams& w, const TerminusPolicy& policy = {});
GeoPolygon bounded(const WedgeParams& w, const BigRational& l1, const BigRational& l2,
                   const TerminusPolicy& policy = {});

MarkedChain boundary_chain(const WedgeParams& w);
WedgeParams from_chain(const MarkedChain& mc, const BigRational& a);
ExtRational marked_cf(const MarkedChain& mc);

struct PairingData {
    BigRational area_on_generator; // p1 p2 a
    BigRational k_dot_c;           // sigma / (p1 p2)
};
PairingData pairing_data(const WedgeParams& w);

// Reflection in a vertical line, re-expressed in the side conventions.
WedgeParams mirror(const WedgeParams& w);

// Moves a realized wedge (possibly after mutation) back to the normal form:
// x1 at the origin, E along +x, R1 = (p1(p1-q1)-1, p1^2).
GeoPolygon renormalize(const GeoPolygon& poly);
// Reads the parameters off a polygon in normal form.
WedgeParams recover_params(const GeoPolygon& normalized);

std::string to_string(const WedgeParams& w); // "Pi(p1,q1,p2,q2,c,a)"

} // namespace atoric
