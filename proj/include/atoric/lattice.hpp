#pragma once

#include "atoric/continued_fraction.hpp"
#include "atoric/rational.hpp"

#include <vector>

namespace atoric {

struct LatticeVector {
    BigInt x, y;
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend LatticeVector operator-(const LatticeVector& v) { return {-v.x, -v.y}; }
    friend LatticeVector operator+(const LatticeVector& u, const LatticeVector& v) { return {u.x + v.x, u.y + v.y}; }
    friend LatticeVector operator-(const LatticeVector& u, const LatticeVector& v) { return {u.x - v.x, u.y - v.y}; }
    friend LatticeVector operator*(const BigInt& k, const LatticeVector& v) { return {k * v.x, k * v.y}; }
};

struct PlanePoint {
    BigRational x, y;
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

PlanePoint operator+(const PlanePoint& p, const PlanePoint& q);
PlanePoint operator-(const PlanePoint& p, const PlanePoint& q);
PlanePoint operator*(const BigRational& t, const PlanePoint& p);
PlanePoint to_point(const LatticeVector& v);
PlanePoint along(const PlanePoint& base, const BigRational& t, const LatticeVector& dir); // base + t*dir

BigInt det(const LatticeVector& u, const LatticeVector& v);
BigRational cross(const PlanePoint& u, const PlanePoint& v);
BigRational dot(const PlanePoint& u, const PlanePoint& v);
bool is_primitive(const LatticeVector& v);
LatticeVector primitive(const LatticeVector& v);
// Primitive lattice vector pointing along a nonzero rational vector.
LatticeVector primitive(const PlanePoint& v);
// Rotation by a quarter turn counterclockwise: (x,y) -> (-y,x).
LatticeVector rotate_ccw(const LatticeVector& v);
bool parallel(const LatticeVector& u, const LatticeVector& v);

// [[a, b], [c, d]] acting on column vectors.
struct Mat2 {
    BigInt a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    BigInt det() const { return a * d - b * c; }
    Mat2 inverse() const; // requires det == 1
    LatticeVector operator()(const LatticeVector& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    PlanePoint operator()(const PlanePoint& v) const;
    friend Mat2 operator*(const Mat2& m, const Mat2& n);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

class ZAffineMap {
public:
    ZAffineMap() : linear_(Mat2::identity()) {}
    ZAffineMap(Mat2 linear, PlanePoint translation);
    static ZAffineMap linear(Mat2 m) { return ZAffineMap(std::move(m), {}); }
    // x -> center + m (x - center)
    static ZAffineMap about(const PlanePoint& center, const Mat2& m);
    static ZAffineMap translation(const PlanePoint& t) { return ZAffineMap(Mat2::identity(), t); }

    const Mat2& matrix() const { return linear_; }
    const PlanePoint& offset() const { return translation_; }

    PlanePoint apply(const PlanePoint& p) const;
    LatticeVector apply(const LatticeVector& v) const { return linear_(v); }
    ZAffineMap inverse() const;
    // (f * g)(x) = f(g(x))
    friend ZAffineMap operator*(const ZAffineMap& f, const ZAffineMap& g);
    friend bool operator==(const ZAffineMap&, const ZAffineMap&) = default;

private:
    Mat2 linear_;
    PlanePoint translation_;
};

// Cyclic quotient type 1/P(1,Q); (1,0) is a smooth point.
struct VertexType {
    BigInt P, Q;
    friend bool operator==(const VertexType&, const VertexType&) = default;
};

// v1 and v2 are the outgoing edge directions at a vertex, v1 -> v2 counterclockwise.
VertexType vertex_type(const LatticeVector& v1, const LatticeVector& v2);
// The unimodular N with N v2 = (0,1) and N v1 = (P,Q) for the vertex type (P,Q).
Mat2 standard_form(const LatticeVector& v1, const LatticeVector& v2);

struct ResolvedEdge {
    LatticeVector direction;
    std::int64_t self_intersection;
    friend bool operator==(const ResolvedEdge&, const ResolvedEdge&) = default;
};

struct ResolutionProfile {
    VertexType type;
    Chain chain;                     // P/Q = [b1,...,br]
    std::vector<ResolvedEdge> edges; // anticlockwise, in the standard model
    std::vector<PlanePoint> vertices;// r+1 resolved corners in the standard model
};

ResolutionProfile resolution_profile(const VertexType& t);
// Resolved edges of the corner with outgoing directions v1, v2, expressed in the
// frame of those vectors (anticlockwise from -v2 towards v1).
std::vector<ResolvedEdge> resolve_corner(const LatticeVector& v1, const LatticeVector& v2);

enum class CutSide { B1, B2 };

Mat2 monodromy_matrix(CutSide side, const BigInt& p1, const BigInt& q1, const BigInt& p2, const BigInt& q2,
                      const BigInt& c);

std::string to_string(const LatticeVector& v);
std::string to_string(const PlanePoint& p);
std::string to_string(const Mat2& m);

} // namespace atoric
