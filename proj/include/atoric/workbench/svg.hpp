#pragma once

#include "atoric/polygon.hpp"

#include <string>

namespace atoric {

struct Viewport {
    BigRational xmin, ymin, xmax, ymax;
    friend bool operator==(const Viewport&, const Viewport&) = default;
};

// Bounding box of vertices, termini and unit steps along the rays, padded by 10%.
Viewport auto_viewport(const GeoPolygon& poly);
Viewport parse_viewport(const std::string& text); // "xmin,ymin,xmax,ymax"

// Deterministic document: clipped fill, boundary edges, dashed cuts, dotted cut
// extensions to the boundary, x-marks at termini, vertex dots. Throws
// ValidationError("empty-viewport").
std::string render_svg(const GeoPolygon& poly, const Viewport& view);
inline std::string render_svg(const GeoPolygon& poly) { return render_svg(poly, auto_viewport(poly)); }

} // namespace atoric
