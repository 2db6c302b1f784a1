#pragma once

#include "atoric/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace atoric {

struct BranchCut {
    PlanePoint base;
    PlanePoint terminus;
    LatticeVector direction;
    ZAffineMap monodromy; // linear; zero translation
    LatticeVector coorientation;

    friend bool operator==(const BranchCut&, const BranchCut&) = default;
};

// Convex polygon with vertices in counterclockwise order. Unbounded polygons carry
// two rays: rays[0] leaves vertices.front(), rays[1] leaves vertices.back().
struct GeoPolygon {
    std::vector<PlanePoint> vertices;
    std::vector<LatticeVector> rays;
    std::vector<BranchCut> cuts;

    bool is_bounded() const { return rays.empty(); }
    friend bool operator==(const GeoPolygon&, const GeoPolygon&) = default;
};

GeoPolygon apply(const ZAffineMap& map, const GeoPolygon& poly);
BranchCut apply(const ZAffineMap& map, const BranchCut& cut);

// Monodromy of the cut expressed for the counterclockwise coorientation.
Mat2 canonical_monodromy(const BranchCut& cut);

// The cut at a smooth corner with outgoing edges e_cw, e_ccw (det = 1): direction
// e_cw + e_ccw, monodromy A with A e_cw = -e_ccw, terminus at parameter t.
BranchCut nodal_trade_cut(const PlanePoint& corner, const LatticeVector& e_cw, const LatticeVector& e_ccw,
                          const BigRational& t);

// Boundary as a counterclockwise cycle. Nodes at infinity store a ray direction.
struct BoundaryNode {
    PlanePoint p;
    bool at_infinity = false;
    friend bool operator==(const BoundaryNode&, const BoundaryNode&) = default;
};
using BoundaryCycle = std::vector<BoundaryNode>;

BoundaryCycle boundary_cycle(const GeoPolygon& poly);
// Drops repeated and straight (180 degree) finite nodes.
BoundaryCycle simplify(BoundaryCycle cyc);
bool is_convex(const BoundaryCycle& cyc);
// Rebuilds vertices/rays; bounded cycles keep their order.
GeoPolygon from_cycle(const BoundaryCycle& cyc, std::vector<BranchCut> cuts);

struct RayHit {
    BigRational t;
    PlanePoint point;
};
// First boundary point origin + t*dir with t > 0.
std::optional<RayHit> ray_exit(const BoundaryCycle& cyc, const PlanePoint& origin, const LatticeVector& dir);
// Index of the node equal to `point`, inserting it on the edge that contains it.
std::optional<std::size_t> insert_on_boundary(BoundaryCycle& cyc, const PlanePoint& point);

// Compares vertices, rays and cuts (base, direction, canonical monodromy), ignoring termini.
std::optional<std::string> shape_difference(const GeoPolygon& a, const GeoPolygon& b);

std::string to_string(const GeoPolygon& poly);

} // namespace atoric
