#include "atoric/lattice.hpp"

#include "atoric/errors.hpp"

namespace atoric {

PlanePoint operator+(const PlanePoint& p, const PlanePoint& q) { return {p.x + q.x, p.y + q.y}; }
PlanePoint operator-(const PlanePoint& p, const PlanePoint& q) { return {p.x - q.x, p.y - q.y}; }
PlanePoint operator*(const BigRational& t, const PlanePoint& p) { return {t * p.x, t * p.y}; }
PlanePoint to_point(const LatticeVector& v) { return {BigRational(v.x), BigRational(v.y)}; }

PlanePoint along(const PlanePoint& base, const BigRational& t, const LatticeVector& dir) {
    return {base.x + t * dir.x, base.y + t * dir.y};
}

BigInt det(const LatticeVector& u, const LatticeVector& v) { return u.x * v.y - u.y * v.x; }
BigRational cross(const PlanePoint& u, const PlanePoint& v) { return u.x * v.y - u.y * v.x; }
BigRational dot(const PlanePoint& u, const PlanePoint& v) { return u.x * v.x + u.y * v.y; }

bool is_primitive(const LatticeVector& v) { return gcd(v.x, v.y) == 1; }

LatticeVector primitive(const LatticeVector& v) {
    BigInt g = gcd(v.x, v.y);
    if (g == 0) throw ValidationError("zero-vector", "zero vector has no direction");
    return {v.x / g, v.y / g};
}

LatticeVector primitive(const PlanePoint& v) {
    BigInt l = lcm(v.x.get_den(), v.y.get_den());
    BigRational sx = v.x * l, sy = v.y * l;
    return primitive(LatticeVector{sx.get_num(), sy.get_num()});
}

LatticeVector rotate_ccw(const LatticeVector& v) { return {-v.y, v.x}; }

bool parallel(const LatticeVector& u, const LatticeVector& v) { return det(u, v) == 0; }

Mat2 Mat2::inverse() const {
    if (det() != 1) throw ValidationError("not-unimodular", "matrix " + to_string(*this) + " is not in SL(2,Z)");
    return {d, -b, -c, a};
}

PlanePoint Mat2::operator()(const PlanePoint& v) const {
    return {BigRational(a) * v.x + BigRational(b) * v.y, BigRational(c) * v.x + BigRational(d) * v.y};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

ZAffineMap::ZAffineMap(Mat2 linear, PlanePoint translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
    if (linear_.det() != 1)
        throw ValidationError("not-unimodular", "affine map needs det +1, got " + to_string(linear_));
}

ZAffineMap ZAffineMap::about(const PlanePoint& center, const Mat2& m) {
    return ZAffineMap(m, center - m(center));
}

PlanePoint ZAffineMap::apply(const PlanePoint& p) const { return linear_(p) + translation_; }

ZAffineMap ZAffineMap::inverse() const {
    Mat2 inv = linear_.inverse();
    PlanePoint t = inv(translation_);
    return ZAffineMap(inv, {-t.x, -t.y});
}

ZAffineMap operator*(const ZAffineMap& f, const ZAffineMap& g) {
    return ZAffineMap(f.linear_ * g.linear_, f.linear_(g.translation_) + f.translation_);
}

Mat2 standard_form(const LatticeVector& v1, const LatticeVector& v2) {
    if (!is_primitive(v1) || !is_primitive(v2))
        throw ValidationError("not-primitive", "vertex_type needs primitive vectors, got " + to_string(v1) + ", " +
                                                   to_string(v2));
    BigInt P = det(v1, v2);
    if (P <= 0)
        throw ValidationError("not-counterclockwise", "det(" + to_string(v1) + "," + to_string(v2) + ") <= 0");
    BigInt s, t, g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v2.x.get_mpz_t(), v2.y.get_mpz_t());
    Mat2 M{v2.y, -v2.x, s, t};
    BigInt omega = s * v1.x + t * v1.y;
    BigInt k = (mod_floor(omega, P) - omega) / P;
    return Mat2{1, 0, k, 1} * M;
}

VertexType vertex_type(const LatticeVector& v1, const LatticeVector& v2) {
    Mat2 N = standard_form(v1, v2);
    LatticeVector w = N(v1);
    return {w.x, w.y};
}

namespace {

// Resolution in the standard model: directions d_0 = (0,-1), d_1 = (1,0), ...,
// d_{r+1} = (P,Q); corners on lines <J d_i, w> = h_i.
void standard_resolution(const VertexType& t, Chain& chain, std::vector<LatticeVector>& dirs,
                         std::vector<PlanePoint>& corners) {
    if (t.P <= 1) throw ValidationError("smooth-vertex", "nothing to resolve at a smooth vertex");
    if (t.Q <= 0 || t.Q >= t.P) throw ValidationError("bad-vertex-type", "vertex type needs 0 < Q < P");
    chain = cf_expand(make_rational(t.P, t.Q));
    dirs = {{0, -1}, {1, 0}};
    for (std::int64_t b : chain) {
        const auto& prev = dirs[dirs.size() - 2];
        const auto& cur = dirs.back();
        dirs.push_back(BigInt(static_cast<long>(b)) * cur - prev);
    }
    if (!(dirs.back() == LatticeVector{t.P, t.Q}))
        throw InternalError("resolution did not close up at " + to_string(dirs.back()));
    corners.clear();
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
        LatticeVector n0 = rotate_ccw(dirs[i]), n1 = rotate_ccw(dirs[i + 1]);
        BigInt h0 = (i == 0) ? 0 : 1;
        BigInt h1 = (i + 2 == dirs.size()) ? 0 : 1;
        // Solve [n0; n1] w = (h0, h1); the determinant is det(d_i, d_{i+1}) = 1.
        BigInt dt = n0.x * n1.y - n0.y * n1.x;
        corners.push_back({make_rational(h0 * n1.y - h1 * n0.y, dt), make_rational(n0.x * h1 - n1.x * h0, dt)});
    }
}

} // namespace

ResolutionProfile resolution_profile(const VertexType& t) {
    ResolutionProfile out{t, {}, {}, {}};
    std::vector<LatticeVector> dirs;
    standard_resolution(t, out.chain, dirs, out.vertices);
    for (std::size_t i = 0; i < out.chain.size(); ++i)
        out.edges.push_back({dirs[i + 1], -out.chain[i]});
    return out;
}

std::vector<ResolvedEdge> resolve_corner(const LatticeVector& v1, const LatticeVector& v2) {
    Mat2 N = standard_form(v1, v2);
    Mat2 Ninv = N.inverse();
    ResolutionProfile prof = resolution_profile(vertex_type(v1, v2));
    std::vector<ResolvedEdge> out;
    for (const auto& e : prof.edges) out.push_back({Ninv(e.direction), e.self_intersection});
    return out;
}

Mat2 monodromy_matrix(CutSide side, const BigInt& p1, const BigInt& q1, const BigInt& p2, const BigInt& q2,
                      const BigInt& c) {
    if (side == CutSide::B1) {
        BigInt u = p1 - q1;
        return {1 + p1 * q1 - p1 * p1, u * u, -p1 * p1, 1 - p1 * q1 + p1 * p1};
    }
    BigInt u = c * p2 - q2;
    return {c * p2 * p2 - p2 * q2 + 1, -u * u, p2 * p2, 1 + p2 * q2 - c * p2 * p2};
}

std::string to_string(const LatticeVector& v) { return "(" + v.x.get_str() + "," + v.y.get_str() + ")"; }

std::string to_string(const PlanePoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::string to_string(const Mat2& m) {
    return "[[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.c.get_str() + "," + m.d.get_str() + "]]";
}

} // namespace atoric
