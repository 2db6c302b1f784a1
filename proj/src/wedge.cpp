#include "atoric/wedge.hpp"

#include "atoric/errors.hpp"

namespace atoric {

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

const char* to_string(KSign k) {
    switch (k) {
    case KSign::KPositive: return "KPositive";
    case KSign::KNegative: return "KNegative";
    default: return "KZero";
    }
}

Side parse_side(std::string_view text) {
    if (text == "left" || text == "Left" || text == "L") return Side::Left;
    if (text == "right" || text == "Right" || text == "R") return Side::Right;
    throw ValidationError("bad-side", "side must be left or right, got '" + std::string(text) + "'");
}

BigInt sigma(const WedgeParams& w) {
    return (w.c - 1) * w.p1 * w.p2 + w.p2 * w.q1 - w.p1 * w.q2;
}

WedgeParams validate(const BigInt& p1, const BigInt& q1, const BigInt& p2, const BigInt& q2, const BigInt& c,
                     const BigRational& a) {
    if (a <= 0) throw ValidationError("nonpositive-length", "edge length a must be positive, got " + to_string(a));
    if (p1 < 1) throw ValidationError("left-out-of-range", "p1 must be positive");
    if (p1 == 1 && q1 == 1)
        throw ValidationError("left-smooth-convention", "a smooth left vertex must be written (1,0), not (1,1)");
    if (q1 < 0 || q1 >= p1) throw ValidationError("left-out-of-range", "need 0 <= q1 < p1");
    if (gcd(p1, q1) != 1) throw ValidationError("left-not-coprime", "gcd(p1,q1) != 1");
    if (p2 < 1) throw ValidationError("right-out-of-range", "p2 must be positive");
    if (p2 == 1 && q2 == 0)
        throw ValidationError("right-smooth-convention", "a smooth right vertex must be written (1,1), not (1,0)");
    if (q2 <= 0 || q2 > p2) throw ValidationError("right-out-of-range", "need 0 < q2 <= p2");
    if (gcd(p2, q2) != 1) throw ValidationError("right-not-coprime", "gcd(p2,q2) != 1");
    WedgeParams w{p1, q1, p2, q2, c, a};
    BigInt s = sigma(w);
    BigInt Delta = p1 * p1 + p2 * p2 + s * p1 * p2;
    if (Delta <= 0)
        throw ValidationError("rays-intersect", "rays intersect (Delta = " + Delta.get_str() + ") - not a truncated wedge");
    return w;
}

WedgeInvariants invariants(const WedgeParams& w) {
    BigInt s = sigma(w);
    BigInt Delta = w.p1 * w.p1 + w.p2 * w.p2 + s * w.p1 * w.p2;
    BigInt Omega = w.p1 * w.q1 + w.p2 * w.q2 - 1 + s * w.p2 * w.q1 - (w.c - 1) * w.p2 * w.p2;
    KSign k = s > 0 ? KSign::KPositive : (s < 0 ? KSign::KNegative : KSign::KZero);
    return {s, Delta, mod_floor(Omega, Delta), w.c, k};
}

LatticeVector ray_direction(const WedgeParams& w, Side side) {
    if (side == Side::Left) return {w.p1 * (w.p1 - w.q1) - 1, w.p1 * w.p1};
    return {w.c * w.p2 * w.p2 - w.p2 * w.q2 + 1, w.p2 * w.p2};
}

LatticeVector cut_direction(const WedgeParams& w, CutSide side) {
    if (side == CutSide::B1) return {w.p1 - w.q1, w.p1};
    return {w.c * w.p2 - w.q2, w.p2};
}

ZAffineMap monodromy(CutSide side, const WedgeParams& w) {
    return ZAffineMap::linear(monodromy_matrix(side, w.p1, w.q1, w.p2, w.q2, w.c));
}

LatticeVector cut_coorientation(const WedgeParams& w, CutSide side) {
    LatticeVector n = rotate_ccw(cut_direction(w, side));
    return side == CutSide::B1 ? n : -n;
}

namespace {

// Parameter s > 0 with base + s*dir on the line through other_base along other_dir.
std::optional<BigRational> line_meet(const PlanePoint& base, const LatticeVector& dir, const PlanePoint& other_base,
                                     const LatticeVector& other_dir) {
    BigInt den = det(dir, other_dir);
    if (den == 0) return std::nullopt;
    BigRational s = cross(other_base - base, to_point(other_dir)) / BigRational(den);
    if (s <= 0) return std::nullopt;
    return s;
}

GeoPolygon decorate(const WedgeParams& w, GeoPolygon poly, const BigRational& cap, const TerminusPolicy& policy) {
    if (policy.fraction <= 0 || policy.fraction >= 1)
        throw ValidationError("bad-terminus-fraction", "terminus fraction must lie in (0,1)");
    BoundaryCycle cyc = boundary_cycle(poly);
    const PlanePoint bases[2] = {poly.vertices.front(), poly.vertices[1]};
    const CutSide sides[2] = {CutSide::B1, CutSide::B2};
    LatticeVector dirs[2] = {cut_direction(w, CutSide::B1), cut_direction(w, CutSide::B2)};
    for (int i = 0; i < 2; ++i) {
        BigRational room = cap;
        if (auto hit = ray_exit(cyc, bases[i], dirs[i]); hit && hit->t < room) room = hit->t;
        if (auto s = line_meet(bases[i], dirs[i], bases[1 - i], dirs[1 - i]); s && *s < room) room = *s;
        poly.cuts.push_back(BranchCut{bases[i], along(bases[i], policy.fraction * room, dirs[i]), dirs[i],
                                      monodromy(sides[i], w), cut_coorientation(w, sides[i])});
    }
    return poly;
}

} // namespace

GeoPolygon realize(const WedgeParams& w, const TerminusPolicy& policy) {
    GeoPolygon poly;
    poly.vertices = {PlanePoint{0, 0}, PlanePoint{w.a, 0}};
    poly.rays = {ray_direction(w, Side::Left), ray_direction(w, Side::Right)};
    return decorate(w, std::move(poly), w.a, policy);
}

GeoPolygon bounded(const WedgeParams& w, const BigRational& l1, const BigRational& l2, const TerminusPolicy& policy) {
    if (l1 <= 0 || l2 <= 0) throw ValidationError("nonpositive-length", "bounding lengths must be positive");
    PlanePoint x1{0, 0}, x2{w.a, 0};
    GeoPolygon poly;
    poly.vertices = {x1, x2, along(x2, l2, ray_direction(w, Side::Right)), along(x1, l1, ray_direction(w, Side::Left))};
    BigRational cap = w.a;
    if (l1 < cap) cap = l1;
    if (l2 < cap) cap = l2;
    return decorate(w, std::move(poly), cap, policy);
}

MarkedChain boundary_chain(const WedgeParams& w) {
    return MarkedChain{wahl_chain(w.p1, w.q1), to_int64(w.c), wahl_chain(w.p2, w.q2)};
}

WedgeParams from_chain(const MarkedChain& mc, const BigRational& a) {
    WahlPair left{1, 0}, right{1, 1};
    if (!mc.left.empty()) {
        auto r = recognize_wahl(mc.left);
        if (!r) throw ValidationError("left-not-wahl", "left block " + to_string(mc.left) + " is not a Wahl chain");
        left = *r;
    }
    if (!mc.right.empty()) {
        auto r = recognize_wahl(mc.right);
        if (!r) throw ValidationError("right-not-wahl", "right block " + to_string(mc.right) + " is not a Wahl chain");
        right = *r;
    }
    return validate(left.p, left.q, right.p, right.q, BigInt(static_cast<long>(mc.c)), a);
}

ExtRational marked_cf(const MarkedChain& mc) { return cf_eval(mc.concatenated()); }

PairingData pairing_data(const WedgeParams& w) {
    BigInt pp = w.p1 * w.p2;
    return {BigRational(pp) * w.a, make_rational(sigma(w), pp)};
}

WedgeParams mirror(const WedgeParams& w) {
    return validate(w.p2, w.p2 - w.q2, w.p1, w.p1 - w.q1, w.c, w.a);
}

namespace {

struct SideData {
    BigInt p, q;
};

// (p, q) of a left ray (u, p^2) in the convention u = p(p-q)-1 mod p^2.
SideData read_left(const LatticeVector& r) {
    auto p = exact_sqrt(r.y);
    if (!p || *p < 1) throw ValidationError("not-a-wedge", "left ray " + to_string(r) + " is not (u, p^2)");
    if (*p == 1) return {1, 0};
    if ((r.x + 1) % *p != 0) throw ValidationError("not-a-wedge", "left ray " + to_string(r) + " is not a Wahl ray");
    return {*p, mod_floor(-(r.x + 1) / *p, *p)};
}

} // namespace

GeoPolygon renormalize(const GeoPolygon& poly) {
    if (poly.is_bounded() || poly.vertices.size() != 2)
        throw ValidationError("not-a-wedge", "renormalize needs two vertices and two rays");
    const PlanePoint& x1 = poly.vertices[0];
    LatticeVector e = primitive(poly.vertices[1] - x1);
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), e.x.get_mpz_t(), e.y.get_mpz_t());
    Mat2 L{s, t, -e.y, e.x};
    LatticeVector r0 = L(poly.rays[0]);
    if (r0.y <= 0) throw ValidationError("not-a-wedge", "polygon does not lie above its compact edge");
    SideData left = read_left(r0);
    BigInt target = left.p * (left.p - left.q) - 1;
    BigInt k = (target - r0.x) / r0.y;
    Mat2 T = Mat2{1, k, 0, 1} * L;
    PlanePoint shift = T(x1);
    return apply(ZAffineMap(T, PlanePoint{-shift.x, -shift.y}), poly);
}

WedgeParams recover_params(const GeoPolygon& poly) {
    if (poly.is_bounded() || poly.vertices.size() != 2 || !(poly.vertices[0] == PlanePoint{0, 0}) ||
        poly.vertices[1].y != 0)
        throw ValidationError("not-normalized", "polygon is not in wedge normal form");
    SideData left = read_left(poly.rays[0]);
    const LatticeVector& r = poly.rays[1];
    auto p2 = exact_sqrt(r.y);
    if (!p2 || *p2 < 1) throw ValidationError("not-a-wedge", "right ray " + to_string(r) + " is not (w, p^2)");
    BigInt q2 = 1;
    if (*p2 > 1) {
        if ((r.x - 1) % *p2 != 0) throw ValidationError("not-a-wedge", "right ray " + to_string(r) + " is not a Wahl ray");
        q2 = mod_floor(-(r.x - 1) / *p2, *p2);
    }
    BigInt num = r.x - 1 + *p2 * q2;
    if (num % (*p2 * *p2) != 0) throw ValidationError("not-a-wedge", "right ray gives a non-integral shear");
    return validate(left.p, left.q, *p2, q2, num / (*p2 * *p2), poly.vertices[1].x);
}

std::string to_string(const WedgeParams& w) {
    std::string a = is_integer(w.a) ? w.a.get_num().get_str() : to_string(w.a);
    return "Pi(" + w.p1.get_str() + "," + w.q1.get_str() + "," + w.p2.get_str() + "," + w.q2.get_str() + "," +
           w.c.get_str() + "," + a + ")";
}

} // namespace atoric
