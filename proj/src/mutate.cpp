#include "atoric/mutate.hpp"

namespace atoric {

const char* to_string(MutabilityStatus s) {
    switch (s) {
    case MutabilityStatus::Mutable: return "Mutable";
    case MutabilityStatus::Borderline: return "Borderline";
    default: return "Immutable";
    }
}

NotMutable::NotMutable(Mutability witness)
    : PreconditionError("not-mutable", std::string(to_string(witness.side)) + " mutation impossible: " +
                                           to_string(witness.status)),
      witness_(std::move(witness)) {}

BigInt mutation_delta(const WedgeParams& w) { return -sigma(w); }

Mutability classify(const WedgeParams& w, Side side) {
    Mutability m{side, MutabilityStatus::Immutable, mutation_delta(w), 0, {}, {}, {}};
    m.criterion = side == Side::Right ? m.delta * w.p2 - w.p1 : m.delta * w.p1 - w.p2;

    MutabilityStatus arithmetic = MutabilityStatus::Immutable;
    if (w.c == 1) {
        if (m.criterion > 0) arithmetic = MutabilityStatus::Mutable;
        else if (m.criterion == 0) arithmetic = MutabilityStatus::Borderline;
    }

    // Geometric test on the realization: the cut's full line against the far ray.
    PlanePoint x1{0, 0}, x2{w.a, 0};
    PlanePoint base = side == Side::Right ? x1 : x2;
    PlanePoint far = side == Side::Right ? x2 : x1;
    LatticeVector d = cut_direction(w, side == Side::Right ? CutSide::B1 : CutSide::B2);
    LatticeVector r = ray_direction(w, side);
    BigInt D = det(d, r);
    if (D == 0) {
        m.status = MutabilityStatus::Borderline;
        m.parallel_direction = d;
    } else {
        BigRational s = cross(far - base, to_point(r)) / BigRational(D);
        BigRational t = cross(far - base, to_point(d)) / BigRational(D);
        if (s > 0 && t >= 0) {
            m.status = MutabilityStatus::Mutable;
            m.intersection = along(base, s, d);
        } else {
            m.separation = Mutability::Separation{D, s, t};
        }
    }
    if (m.status != arithmetic)
        throw InternalError(std::string("classify: geometric test says ") + to_string(m.status) +
                            " but the arithmetic criterion says " + to_string(arithmetic) + " for " + to_string(w));
    return m;
}

WedgeParams mutate(const WedgeParams& w, Side side) {
    Mutability m = classify(w, side);
    if (m.status != MutabilityStatus::Mutable) throw NotMutable(m);
    const BigInt& delta = m.delta;
    if (side == Side::Right) {
        BigInt p3 = delta * w.p2 - w.p1;
        BigInt q3 = delta * w.q2 - w.q1;
        BigInt q2 = w.p2 == 1 ? BigInt(0) : w.q2;
        // q3 into (0, p3] through Pi(..,p,q+kp,c) = Pi(..,p,q,c-k).
        BigInt k = ceil_div(q3, p3) - 1;
        return validate(w.p2, q2, p3, q3 - k * p3, 1 - k, w.a * w.p1 / p3);
    }
    BigInt p0 = delta * w.p1 - w.p2;
    BigInt q0 = delta * w.q1 - w.q2;
    BigInt q1 = w.p1 == 1 ? BigInt(1) : w.q1;
    // q0 into [0, p0) through Pi(p,q+kp,..,c) = Pi(p,q,..,c+k).
    BigInt k = floor_div(q0, p0);
    return validate(p0, q0 - k * p0, w.p1, q1, 1 + k, w.a * w.p2 / p0);
}

GeoPolygon geometric_mutate(const GeoPolygon& poly, std::size_t cut_index) {
    if (cut_index >= poly.cuts.size()) throw ValidationError("bad-cut-index", "no cut with that index");
    const BranchCut& cut = poly.cuts[cut_index];
    const PlanePoint& z = cut.terminus;
    PlanePoint d = to_point(cut.direction);
    auto side_of = [&](const BoundaryNode& n) {
        return sign(n.at_infinity ? cross(d, n.p) : cross(d, n.p - z));
    };

    BoundaryCycle cyc = boundary_cycle(poly);
    auto exit = ray_exit(cyc, z, cut.direction);
    if (!exit) throw PreconditionError("cut-does-not-exit", "the extension of the cut never meets the boundary");
    if (!insert_on_boundary(cyc, cut.base))
        throw ValidationError("cut-base-off-boundary", "cut base " + to_string(cut.base) + " is not on the boundary");
    if (!insert_on_boundary(cyc, exit->point)) throw InternalError("exit point not on the boundary");

    int upper = sign(cross(d, to_point(cut.coorientation)));
    if (upper == 0) throw ValidationError("bad-coorientation", "coorientation parallel to the cut");
    int lower = -upper;

    std::vector<BranchCut> cuts;
    ZAffineMap A = ZAffineMap::about(z, cut.monodromy.matrix());
    for (std::size_t k = 0; k < poly.cuts.size(); ++k) {
        if (k == cut_index) {
            cuts.push_back(BranchCut{exit->point, z, -cut.direction, cut.monodromy.inverse(), cut.coorientation});
            continue;
        }
        const BranchCut& other = poly.cuts[k];
        int hb = sign(cross(d, other.base - z));
        int ht = sign(cross(d, other.terminus - z));
        if (ht == 0 || hb * ht < 0)
            throw PreconditionError("cut-obstructed", "the line of the cut meets the cut based at " +
                                                          to_string(other.base));
        cuts.push_back(ht == lower ? apply(A, other) : other);
    }

    for (auto& n : cyc) {
        if (side_of(n) != lower) continue;
        if (n.at_infinity) n.p = to_point(primitive(A.apply(primitive(n.p))));
        else n.p = A.apply(n.p);
    }
    cyc = simplify(std::move(cyc));
    if (!is_convex(cyc)) throw PreconditionError("not-convex", "mutation produced a non-convex boundary");
    return from_cycle(cyc, std::move(cuts));
}

GeoPolygon geometric_mutate_wedge(const WedgeParams& w, Side side, const TerminusPolicy& policy) {
    return renormalize(geometric_mutate(realize(w, policy), side == Side::Right ? 0 : 1));
}

MinusOneSphere minus_one_sphere(const WedgeParams& w, Side side, const TerminusPolicy& policy) {
    Mutability m = classify(w, opposite(side));
    if (m.status != MutabilityStatus::Borderline)
        throw PreconditionError("not-borderline", std::string(to_string(opposite(side))) + " side is " +
                                                      to_string(m.status) + ", not Borderline");
    GeoPolygon poly = realize(w, policy);
    PlanePoint from = poly.cuts[side == Side::Right ? 1 : 0].terminus;
    PlanePoint edge_base = side == Side::Right ? poly.vertices[0] : poly.vertices[1];
    LatticeVector r = ray_direction(w, opposite(side));
    // Parallel to E, towards the far edge; the strip between the cut line and the edge is crossed.
    LatticeVector v = side == Side::Right ? LatticeVector{-1, 0} : LatticeVector{1, 0};
    PlanePoint rp = to_point(r);
    BigRational t = -cross(rp, from - edge_base) / cross(rp, to_point(v));
    PlanePoint hit = along(from, t, v);
    if (t <= 0 || dot(hit - edge_base, rp) < 0) throw InternalError("visible sphere misses its edge");
    return MinusOneSphere{side, from, v, *m.parallel_direction, hit, side == Side::Right ? "R1" : "R2"};
}

} // namespace atoric
