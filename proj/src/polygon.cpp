#include "atoric/polygon.hpp"

#include "atoric/errors.hpp"

#include <algorithm>

namespace atoric {

BranchCut apply(const ZAffineMap& map, const BranchCut& cut) {
    const Mat2& L = map.matrix();
    Mat2 conj = L * cut.monodromy.matrix() * L.inverse();
    return BranchCut{map.apply(cut.base), map.apply(cut.terminus), L(cut.direction), ZAffineMap::linear(conj),
                     L(cut.coorientation)};
}

GeoPolygon apply(const ZAffineMap& map, const GeoPolygon& poly) {
    GeoPolygon out;
    for (const auto& v : poly.vertices) out.vertices.push_back(map.apply(v));
    for (const auto& r : poly.rays) out.rays.push_back(map.apply(r));
    for (const auto& c : poly.cuts) out.cuts.push_back(apply(map, c));
    return out;
}

Mat2 canonical_monodromy(const BranchCut& cut) {
    BigInt s = det(cut.direction, cut.coorientation);
    if (s == 0) throw ValidationError("bad-coorientation", "coorientation parallel to cut direction");
    return s > 0 ? cut.monodromy.matrix() : cut.monodromy.matrix().inverse();
}

BranchCut nodal_trade_cut(const PlanePoint& corner, const LatticeVector& e_cw, const LatticeVector& e_ccw,
                          const BigRational& t) {
    if (det(e_cw, e_ccw) != 1)
        throw ValidationError("not-smooth-corner", "corner edges " + to_string(e_cw) + ", " + to_string(e_ccw) +
                                                       " do not form a lattice basis");
    if (t <= 0) throw ValidationError("nonpositive-length", "terminus parameter must be positive");
    LatticeVector d = e_cw + e_ccw;
    Mat2 X{e_cw.x, d.x, e_cw.y, d.y};
    Mat2 Y{-e_ccw.x, d.x, -e_ccw.y, d.y};
    Mat2 A = Y * X.inverse();
    return BranchCut{corner, along(corner, t, d), d, ZAffineMap::linear(A), rotate_ccw(d)};
}

BoundaryCycle boundary_cycle(const GeoPolygon& poly) {
    BoundaryCycle cyc;
    if (!poly.is_bounded()) {
        if (poly.rays.size() != 2) throw ValidationError("bad-polygon", "unbounded polygon needs exactly two rays");
        cyc.push_back({to_point(poly.rays[0]), true});
    }
    for (const auto& v : poly.vertices) cyc.push_back({v, false});
    if (!poly.is_bounded()) cyc.push_back({to_point(poly.rays[1]), true});
    return cyc;
}

namespace {

// Travel direction arriving at node i and leaving it (finite node only).
PlanePoint incoming(const BoundaryCycle& cyc, std::size_t i) {
    const auto& prev = cyc[(i + cyc.size() - 1) % cyc.size()];
    if (prev.at_infinity) return PlanePoint{-prev.p.x, -prev.p.y};
    return cyc[i].p - prev.p;
}

PlanePoint outgoing(const BoundaryCycle& cyc, std::size_t i) {
    const auto& next = cyc[(i + 1) % cyc.size()];
    if (next.at_infinity) return next.p;
    return next.p - cyc[i].p;
}

bool same_direction(const PlanePoint& u, const PlanePoint& v) {
    return cross(u, v) == 0 && dot(u, v) > 0;
}

} // namespace

BoundaryCycle simplify(BoundaryCycle cyc) {
    bool changed = true;
    while (changed && cyc.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const auto& next = cyc[(i + 1) % cyc.size()];
            if (cyc[i].at_infinity) {
                if (next.at_infinity && same_direction(cyc[i].p, next.p)) {
                    cyc.erase(cyc.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
                continue;
            }
            if (!next.at_infinity && next.p == cyc[i].p) {
                cyc.erase(cyc.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            if (same_direction(incoming(cyc, i), outgoing(cyc, i))) {
                cyc.erase(cyc.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return cyc;
}

bool is_convex(const BoundaryCycle& cyc) {
    std::size_t runs = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& next = cyc[(i + 1) % cyc.size()];
        if (cyc[i].at_infinity) {
            if (!next.at_infinity) ++runs;
            else if (cross(cyc[i].p, next.p) < 0) return false;
            continue;
        }
        if (cross(incoming(cyc, i), outgoing(cyc, i)) <= 0) return false;
    }
    if (runs > 1) return false;
    // Local left turns still allow a bounded cycle that winds twice.
    if (runs == 0) {
        auto half = [](const PlanePoint& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
        int wraps = 0;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (half(incoming(cyc, i)) == 1 && half(outgoing(cyc, i)) == 0) ++wraps;
        if (wraps != 1) return false;
    }
    return true;
}

GeoPolygon from_cycle(const BoundaryCycle& cyc, std::vector<BranchCut> cuts) {
    GeoPolygon out;
    out.cuts = std::move(cuts);
    auto inf = std::find_if(cyc.begin(), cyc.end(), [](const BoundaryNode& n) { return n.at_infinity; });
    if (inf == cyc.end()) {
        for (const auto& n : cyc) out.vertices.push_back(n.p);
        return out;
    }
    std::size_t start = 0;
    bool found = false;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (cyc[i].at_infinity && !cyc[(i + 1) % cyc.size()].at_infinity) {
            if (found) throw ValidationError("bad-polygon", "boundary has two separate ends at infinity");
            start = i;
            found = true;
        }
    }
    if (!found) throw ValidationError("bad-polygon", "unbounded boundary without finite vertices");
    out.rays.push_back(primitive(cyc[start].p));
    for (std::size_t k = 1; k < cyc.size(); ++k) {
        const auto& n = cyc[(start + k) % cyc.size()];
        if (n.at_infinity) {
            out.rays.push_back(primitive(n.p));
            break;
        }
        out.vertices.push_back(n.p);
    }
    return out;
}

namespace {

struct EdgeSet {
    PlanePoint origin;
    PlanePoint dir;
    bool unbounded; // origin + s*dir for s in [0,1] or [0,inf)
};

std::optional<EdgeSet> edge_set(const BoundaryCycle& cyc, std::size_t i) {
    const auto& a = cyc[i];
    const auto& b = cyc[(i + 1) % cyc.size()];
    if (a.at_infinity && b.at_infinity) return std::nullopt;
    if (a.at_infinity) return EdgeSet{b.p, a.p, true};
    if (b.at_infinity) return EdgeSet{a.p, b.p, true};
    return EdgeSet{a.p, b.p - a.p, false};
}

} // namespace

std::optional<RayHit> ray_exit(const BoundaryCycle& cyc, const PlanePoint& origin, const LatticeVector& dir) {
    PlanePoint d = to_point(dir);
    std::optional<RayHit> best;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        auto e = edge_set(cyc, i);
        if (!e) continue;
        BigRational den = cross(d, e->dir);
        if (den == 0) continue;
        PlanePoint w = e->origin - origin;
        BigRational t = cross(w, e->dir) / den;
        BigRational s = cross(w, d) / den;
        if (t <= 0 || s < 0 || (!e->unbounded && s > 1)) continue;
        if (!best || t < best->t) best = RayHit{t, along(origin, t, dir)};
    }
    return best;
}

std::optional<std::size_t> insert_on_boundary(BoundaryCycle& cyc, const PlanePoint& point) {
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!cyc[i].at_infinity && cyc[i].p == point) return i;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        auto e = edge_set(cyc, i);
        if (!e) continue;
        PlanePoint w = point - e->origin;
        if (cross(w, e->dir) != 0) continue;
        BigRational s = dot(w, e->dir) / dot(e->dir, e->dir);
        if (s < 0 || (!e->unbounded && s > 1)) continue;
        cyc.insert(cyc.begin() + static_cast<long>(i + 1), BoundaryNode{point, false});
        return i + 1;
    }
    return std::nullopt;
}

std::optional<std::string> shape_difference(const GeoPolygon& a, const GeoPolygon& b) {
    if (a.vertices != b.vertices) return "vertices differ: " + to_string(a) + " vs " + to_string(b);
    if (a.rays != b.rays) return "rays differ: " + to_string(a) + " vs " + to_string(b);
    if (a.cuts.size() != b.cuts.size()) return std::string("cut counts differ");
    for (const auto& ca : a.cuts) {
        auto it = std::find_if(b.cuts.begin(), b.cuts.end(), [&](const BranchCut& cb) { return cb.base == ca.base; });
        if (it == b.cuts.end()) return "no cut based at " + to_string(ca.base);
        if (it->direction != ca.direction)
            return "cut at " + to_string(ca.base) + ": direction " + to_string(ca.direction) + " vs " +
                   to_string(it->direction);
        if (canonical_monodromy(*it) != canonical_monodromy(ca))
            return "cut at " + to_string(ca.base) + ": monodromy " + to_string(canonical_monodromy(ca)) + " vs " +
                   to_string(canonical_monodromy(*it));
    }
    return std::nullopt;
}

std::string to_string(const GeoPolygon& poly) {
    std::string s = "{vertices:[";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) s += (i ? "," : "") + to_string(poly.vertices[i]);
    s += "],rays:[";
    for (std::size_t i = 0; i < poly.rays.size(); ++i) s += (i ? "," : "") + to_string(poly.rays[i]);
    s += "],cuts:[";
    for (std::size_t i = 0; i < poly.cuts.size(); ++i) {
        const auto& c = poly.cuts[i];
        s += (i ? "," : "") + std::string("{base:") + to_string(c.base) + ",dir:" + to_string(c.direction) +
             ",A:" + to_string(c.monodromy.matrix()) + "}";
    }
    return s + "]}";
}

} // namespace atoric
