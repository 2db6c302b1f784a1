#pragma once

// JSON views of the core types. Every number is a string ("5", "3/2") so that
// exact values survive the round trip; chains stay plain integer arrays.

#include "atoric/flip.hpp"
#include "atoric/hjchain.hpp"
#include "atoric/mori.hpp"
#include "atoric/mutate.hpp"

#include <json.hpp>

namespace atoric {

using Json = nlohmann::ordered_json;

std::string rat(const BigRational& x); // "3/2", or "5" when integral
std::string rat(const BigInt& x);

BigInt int_field(const Json& j, const char* key);
BigRational rational_field(const Json& j, const char* key);
std::optional<BigRational> optional_rational(const Json& j, const char* key);

Json to_json(const WedgeParams& w);
WedgeParams wedge_from_json(const Json& j); // validates
Json to_json(const WedgeInvariants& inv);
Json to_json(const LatticeVector& v);
Json to_json(const PlanePoint& p);
Json to_json(const Mat2& m);
Json to_json(const QuadraticSurd& s);
Json to_json(const GeoPolygon& g);
Json to_json(const Mutability& m);
Json to_json(const MinusOneSphere& s);
Json to_json(const MoriSequence& m); // with per-step certificates
Json to_json(const AsymptoticReport& r);
Json to_json(const Budget& b);
Json to_json(const AntiflipCap& cap);
Json to_json(const AntiflipResult& r);
Json to_json(const AntiflipInBounds& r);
Json to_json(const FlipResult& r);
Json to_json(const CohomologyPath& c);
Json to_json(const MarkedChain& mc);
Json to_json(const WahlSplit& s);
Json to_json(const K1AReport& r);

Chain chain_from_json(const Json& j);
// Accepts "[4]-3-[]" or {"left":[4],"c":3,"right":[]}.
MarkedChain marked_chain_from_json(const Json& j);
// [{"op":"up"|"down","at":n,"expect":[...]}]
MoveScript script_from_json(const Json& j);
Json to_json(const MoveScript& s);

Json error_json(const Error& e);
std::string error_code(const Error& e);

} // namespace atoric
