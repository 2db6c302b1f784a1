#include "atoric/workbench/svg.hpp"

#include "atoric/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

namespace atoric {

namespace {

using Poly = std::vector<PlanePoint>;

BigRational abs_q(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

// Keeps the part of a closed polygon with sign * (coordinate - bound) >= 0.
Poly clip_half(const Poly& in, bool use_x, const BigRational& bound, int sign) {
    auto inside = [&](const PlanePoint& p) { return sign * ((use_x ? p.x : p.y) - bound) >= 0; };
    Poly out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        const PlanePoint& a = in[i];
        const PlanePoint& b = in[(i + 1) % in.size()];
        bool ia = inside(a), ib = inside(b);
        if (ia) out.push_back(a);
        if (ia != ib) {
            BigRational ca = use_x ? a.x : a.y, cb = use_x ? b.x : b.y;
            BigRational t = (bound - ca) / (cb - ca);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

Poly clip_to(const Poly& p, const Viewport& v) {
    Poly r = clip_half(p, true, v.xmin, 1);
    r = clip_half(r, true, v.xmax, -1);
    r = clip_half(r, false, v.ymin, 1);
    return clip_half(r, false, v.ymax, -1);
}

// Liang-Barsky on a + t(b - a), t in [0, 1].
std::optional<std::pair<PlanePoint, PlanePoint>> clip_segment(const PlanePoint& a, const PlanePoint& b,
                                                              const Viewport& v) {
    BigRational t0 = 0, t1 = 1;
    PlanePoint d = b - a;
    auto edge = [&](const BigRational& p, const BigRational& q) {
        if (p == 0) return q >= 0;
        BigRational r = q / p;
        if (p < 0) {
            if (r > t1) return false;
            if (r > t0) t0 = r;
        } else {
            if (r < t0) return false;
            if (r < t1) t1 = r;
        }
        return true;
    };
    if (!edge(-d.x, a.x - v.xmin) || !edge(d.x, v.xmax - a.x) || !edge(-d.y, a.y - v.ymin) ||
        !edge(d.y, v.ymax - a.y))
        return std::nullopt;
    return std::make_pair(a + t0 * d, a + t1 * d);
}

// Parameter large enough that ray ends and the closing chord lie outside the viewport.
BigRational far_param(const GeoPolygon& g, const Viewport& v) {
    BigRational reach = abs_q(v.xmin) + abs_q(v.xmax) + abs_q(v.ymin) + abs_q(v.ymax) + 1;
    for (const auto& p : g.vertices) reach += abs_q(p.x) + abs_q(p.y);
    if (g.rays.size() == 2) {
        LatticeVector d = g.rays[0] - g.rays[1];
        reach *= BigRational(abs(d.x) + abs(d.y) + 1);
    }
    return reach;
}

class Writer {
public:
    Writer(const Viewport& v) : v_(v), scale_(BigRational(480) / (v.xmax - v.xmin)) {}

    std::string x(const BigRational& a) const { return num((a - v_.xmin) * scale_); }
    std::string y(const BigRational& b) const { return num((v_.ymax - b) * scale_); }
    std::string pt(const PlanePoint& p) const { return x(p.x) + "," + y(p.y); }
    std::string width() const { return num(480); }
    std::string height() const { return num((v_.ymax - v_.ymin) * scale_); }

    static std::string num(const BigRational& q) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", q.get_d());
        std::string s = buf;
        return s == "-0.000" ? "0.000" : s;
    }

    std::string line(const PlanePoint& a, const PlanePoint& b, const std::string& cls) const {
        return "<line class=\"" + cls + "\" x1=\"" + x(a.x) + "\" y1=\"" + y(a.y) + "\" x2=\"" + x(b.x) + "\" y2=\"" +
               y(b.y) + "\"/>\n";
    }

private:
    Viewport v_;
    BigRational scale_;
};

} // namespace

Viewport auto_viewport(const GeoPolygon& poly) {
    std::vector<PlanePoint> pts = poly.vertices;
    for (const auto& c : poly.cuts) pts.push_back(c.terminus);
    if (poly.rays.size() == 2) {
        // One unit of the longest finite edge (or 1) along each ray.
        BigRational reach = 1;
        for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
            PlanePoint e = poly.vertices[i + 1] - poly.vertices[i];
            reach = std::max(reach, std::max(abs_q(e.x), abs_q(e.y)));
        }
        for (int k = 0; k < 2; ++k) {
            const PlanePoint& from = k == 0 ? poly.vertices.front() : poly.vertices.back();
            const LatticeVector& r = poly.rays[k];
            BigRational len = std::max(abs_q(BigRational(r.x)), abs_q(BigRational(r.y)));
            pts.push_back(along(from, reach / len, r));
        }
    }
    if (pts.empty()) throw ValidationError("empty-polygon", "nothing to render");
    Viewport v{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const auto& p : pts) {
        v.xmin = std::min(v.xmin, p.x);
        v.xmax = std::max(v.xmax, p.x);
        v.ymin = std::min(v.ymin, p.y);
        v.ymax = std::max(v.ymax, p.y);
    }
    BigRational w = v.xmax - v.xmin, h = v.ymax - v.ymin;
    BigRational pad = BigRational(std::max(w, h) / 10);
    if (pad < BigRational(1, 2)) pad = BigRational(1, 2);
    return Viewport{v.xmin - pad, v.ymin - pad, v.xmax + pad, v.ymax + pad};
}

Viewport parse_viewport(const std::string& text) {
    std::vector<BigRational> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(parse_rational(item));
    if (vals.size() != 4) throw ValidationError("bad-viewport", "viewport is xmin,ymin,xmax,ymax");
    return Viewport{vals[0], vals[1], vals[2], vals[3]};
}

std::string render_svg(const GeoPolygon& poly, const Viewport& view) {
    if (view.xmin >= view.xmax || view.ymin >= view.ymax)
        throw ValidationError("empty-viewport", "viewport has no area");
    Writer w(view);

    Poly shape = poly.vertices;
    std::vector<std::pair<PlanePoint, PlanePoint>> edges;
    for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) edges.emplace_back(poly.vertices[i], poly.vertices[i + 1]);
    if (poly.is_bounded()) {
        if (poly.vertices.size() > 2) edges.emplace_back(poly.vertices.back(), poly.vertices.front());
    } else {
        BigRational T = far_param(poly, view);
        PlanePoint start = along(poly.vertices.front(), T, poly.rays[0]);
        PlanePoint end = along(poly.vertices.back(), T, poly.rays[1]);
        shape.insert(shape.begin(), start);
        shape.push_back(end);
        edges.emplace_back(start, poly.vertices.front());
        edges.emplace_back(poly.vertices.back(), end);
    }
    Poly fill = clip_to(shape, view);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w.width() + "\" height=\"" + w.height() +
           "\" viewBox=\"0 0 " + w.width() + " " + w.height() + "\">\n";
    out += "<style>.fill{fill:#dfe8f2;stroke:none}.edge{stroke:#1d3557;stroke-width:2}"
           ".cut{stroke:#c1121f;stroke-width:1.5;stroke-dasharray:6 4}"
           ".ext{stroke:#c1121f;stroke-width:1;stroke-dasharray:1 4}"
           ".node{stroke:#000;stroke-width:2}.vertex{fill:#1d3557}</style>\n";
    if (fill.size() >= 3) {
        out += "<polygon class=\"fill\" points=\"";
        for (std::size_t i = 0; i < fill.size(); ++i) out += (i ? " " : "") + w.pt(fill[i]);
        out += "\"/>\n";
    }
    for (const auto& [a, b] : edges)
        if (auto s = clip_segment(a, b, view)) out += w.line(s->first, s->second, "edge");

    BoundaryCycle cyc = boundary_cycle(poly);
    BigRational mark = (view.xmax - view.xmin) / 80;
    for (const auto& c : poly.cuts) {
        if (auto s = clip_segment(c.base, c.terminus, view)) out += w.line(s->first, s->second, "cut");
        PlanePoint far;
        if (auto hit = ray_exit(cyc, c.terminus, c.direction)) far = hit->point;
        else far = along(c.terminus, far_param(poly, view), c.direction);
        if (auto s = clip_segment(c.terminus, far, view)) out += w.line(s->first, s->second, "ext");
        const PlanePoint& z = c.terminus;
        out += w.line({z.x - mark, z.y - mark}, {z.x + mark, z.y + mark}, "node");
        out += w.line({z.x - mark, z.y + mark}, {z.x + mark, z.y - mark}, "node");
    }
    for (const auto& p : poly.vertices)
        if (p.x >= view.xmin && p.x <= view.xmax && p.y >= view.ymin && p.y <= view.ymax)
            out += "<circle class=\"vertex\" cx=\"" + w.x(p.x) + "\" cy=\"" + w.y(p.y) + "\" r=\"3\"/>\n";
    out += "</svg>\n";
    return out;
}

} // namespace atoric
