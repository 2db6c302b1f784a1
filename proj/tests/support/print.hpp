#pragma once
// Stream operators so doctest prints library values on failure.

#include "atoric/mori.hpp"
#include "atoric/wedge.hpp"

#include <ostream>

namespace atoric {
inline std::ostream& operator<<(std::ostream& os, const WedgeParams& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }
inline std::ostream& operator<<(std::ostream& os, const PlanePoint& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << to_string(m); }
inline std::ostream& operator<<(std::ostream& os, const ExtRational& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const VertexType& t) {
    return os << "(" << t.P.get_str() << "," << t.Q.get_str() << ")";
}
inline std::ostream& operator<<(std::ostream& os, const MoriPair& p) {
    return os << "(" << p.p.get_str() << "," << p.q.get_str() << ")";
}
inline std::ostream& operator<<(std::ostream& os, const MarkedChain& c) { return os << to_string(c); }
inline std::ostream& operator<<(std::ostream& os, const GeoPolygon& g) { return os << to_string(g); }
} // namespace atoric

namespace std {
inline std::ostream& operator<<(std::ostream& os, const atoric::Chain& c) { return os << atoric::to_string(c); }
} // namespace std
