#include "atoric/workbench/json_io.hpp"

#include "atoric/errors.hpp"

namespace atoric {

std::string rat(const BigRational& x) { return is_integer(x) ? x.get_num().get_str() : to_string(x); }
std::string rat(const BigInt& x) { return x.get_str(); }

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError("missing-field", std::string("missing field ") + key);
    return j.at(key);
}

std::string text_of(const Json& v, const char* key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    throw ValidationError("bad-number", std::string("field ") + key + " must be an integer or a rational string");
}

} // namespace

BigInt int_field(const Json& j, const char* key) { return parse_int(text_of(field(j, key), key)); }
BigRational rational_field(const Json& j, const char* key) { return parse_rational(text_of(field(j, key), key)); }

std::optional<BigRational> optional_rational(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return rational_field(j, key);
}

Json to_json(const WedgeParams& w) {
    return {{"p1", rat(w.p1)}, {"q1", rat(w.q1)}, {"p2", rat(w.p2)}, {"q2", rat(w.q2)},
            {"c", rat(w.c)},   {"a", rat(w.a)},   {"text", to_string(w)}};
}

WedgeParams wedge_from_json(const Json& j) {
    if (j.is_string()) {
        // "Pi(p1,q1,p2,q2,c,a)" or the bare tuple
        std::string s = j.get<std::string>();
        if (s.rfind("Pi(", 0) == 0 && s.back() == ')') s = s.substr(3, s.size() - 4);
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t k = 0; k <= s.size(); ++k)
            if (k == s.size() || s[k] == ',') {
                parts.push_back(s.substr(start, k - start));
                start = k + 1;
            }
        if (parts.size() != 6) throw ValidationError("bad-wedge", "expected six comma-separated parameters");
        return validate(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3]),
                        parse_int(parts[4]), parse_rational(parts[5]));
    }
    return validate(int_field(j, "p1"), int_field(j, "q1"), int_field(j, "p2"), int_field(j, "q2"),
                    int_field(j, "c"), rational_field(j, "a"));
}

Json to_json(const WedgeInvariants& inv) {
    return {{"sigma", rat(inv.sigma)}, {"Delta", rat(inv.Delta)}, {"Omega", rat(inv.Omega)},
            {"shear", rat(inv.shear)}, {"k", to_string(inv.k)}};
}

Json to_json(const LatticeVector& v) { return Json::array({rat(v.x), rat(v.y)}); }
Json to_json(const PlanePoint& p) { return Json::array({rat(p.x), rat(p.y)}); }
Json to_json(const Mat2& m) {
    return Json::array({Json::array({rat(m.a), rat(m.b)}), Json::array({rat(m.c), rat(m.d)})});
}

Json to_json(const QuadraticSurd& s) {
    return {{"a", rat(s.a())}, {"b", rat(s.b())}, {"d", rat(s.d())}, {"text", to_string(s)},
            {"decimal", s.to_decimal(12)}};
}

Json to_json(const GeoPolygon& g) {
    Json v = Json::array(), r = Json::array(), cuts = Json::array();
    for (const auto& p : g.vertices) v.push_back(to_json(p));
    for (const auto& d : g.rays) r.push_back(to_json(d));
    for (const auto& c : g.cuts)
        cuts.push_back({{"base", to_json(c.base)},
                        {"terminus", to_json(c.terminus)},
                        {"direction", to_json(c.direction)},
                        {"monodromy", to_json(c.monodromy.matrix())},
                        {"coorientation", to_json(c.coorientation)}});
    return {{"vertices", v}, {"rays", r}, {"cuts", cuts}};
}

Json to_json(const Mutability& m) {
    Json j = {{"side", to_string(m.side)},
              {"status", to_string(m.status)},
              {"delta", rat(m.delta)},
              {"criterion", rat(m.criterion)}};
    if (m.intersection) j["intersection"] = to_json(*m.intersection);
    if (m.parallel_direction) j["parallel"] = to_json(*m.parallel_direction);
    if (m.separation) {
        Json s = {{"cross", rat(m.separation->cross)}};
        if (m.separation->cut_param) s["cutParam"] = rat(*m.separation->cut_param);
        if (m.separation->ray_param) s["rayParam"] = rat(*m.separation->ray_param);
        j["separation"] = s;
    }
    return j;
}

Json to_json(const MinusOneSphere& s) {
    return {{"side", to_string(s.side)},      {"from", to_json(s.from)}, {"direction", to_json(s.direction)},
            {"parallel", to_json(s.parallel)}, {"hit", to_json(s.hit)},   {"edge", s.edge}};
}

Json to_json(const MoriSequence& m) {
    Json pairs = Json::array(), shown = Json::array(), certs = Json::array();
    for (const auto& p : m.pairs) pairs.push_back(Json::array({rat(p.p), rat(p.q)}));
    for (const auto& p : m.display_pairs()) shown.push_back(Json::array({rat(p.p), rat(p.q)}));
    const BigInt& d = m.seed.delta;
    for (std::size_t i = 0; i + 1 < m.pairs.size(); ++i) {
        const auto &x = m.pairs[i], &y = m.pairs[i + 1];
        BigInt D = x.p * x.p + y.p * y.p - d * x.p * y.p;
        BigInt det = x.p * y.q - y.p * x.q;
        certs.push_back({{"step", i + 1}, {"Delta", rat(D)}, {"det", rat(det)}});
    }
    return {{"seed", {{"p1", rat(m.seed.p1)}, {"q1", rat(m.seed.q1)}, {"p2", rat(m.seed.p2)}, {"q2", rat(m.seed.q2)}}},
            {"delta", rat(d)},
            {"classification", to_string(m.classification)},
            {"terminated", m.terminated},
            {"pairs", pairs},
            {"display", shown},
            {"certificates", certs}};
}

Json to_json(const AsymptoticReport& r) {
    Json j = {{"region", to_string(r.region)}};
    if (r.lambda_minus) j["lambdaMinus"] = to_json(*r.lambda_minus);
    if (r.lambda_plus) j["lambdaPlus"] = to_json(*r.lambda_plus);
    Json ratios = Json::array();
    for (const auto& x : r.ratios) ratios.push_back(rat(x));
    j["ratios"] = ratios;
    return j;
}

Json to_json(const Budget& b) {
    Json consumed = Json::array(), sums = Json::array();
    for (const auto& x : b.consumed) consumed.push_back(rat(x));
    for (const auto& x : b.partial_sums) sums.push_back(rat(x));
    Json j = {{"aMinus", rat(b.a_minus)}, {"l2", rat(b.l2)},         {"delta", rat(b.delta)},
              {"consumed", consumed},    {"partialSums", sums},      {"verdict", to_string(b.verdict)},
              {"fits", b.fits},          {"overflowStep", nullptr}, {"bound", nullptr}};
    if (b.overflow_step) j["overflowStep"] = *b.overflow_step;
    if (b.bound) j["bound"] = to_json(*b.bound);
    return j;
}

Json to_json(const AntiflipCap& cap) { return {{"exact", to_json(cap.exact)}, {"under", rat(cap.under)}}; }

Json to_json(const AntiflipResult& r) {
    return {{"plus", to_json(r.plus)},
            {"minus", to_json(r.minus)},
            {"delta", rat(r.delta_used)},
            {"q1Adjusted", r.q1_adjusted}};
}

Json to_json(const AntiflipInBounds& r) {
    return {{"result", to_json(r.result)},
            {"l1", rat(r.l1)},
            {"l2", rat(r.l2)},
            {"certified", r.certified},
            {"budget", to_json(r.budget)}};
}

Json to_json(const FlipResult& r) {
    Json descent = Json::array();
    for (const auto& w : r.descent) descent.push_back(to_json(w));
    Json j = {{"kind", to_string(r.kind)}, {"descent", descent}};
    if (r.plus) j["plus"] = to_json(*r.plus);
    if (r.sphere) j["sphere"] = to_json(*r.sphere);
    return j;
}

Json to_json(const CohomologyPath& c) {
    return {{"delta", rat(c.delta)},
            {"start", rat(c.start)},
            {"end", rat(c.end)},
            {"affineDistance", rat(c.affine_distance)},
            {"cap", to_json(c.cap)},
            {"gapHigh", to_json(c.gap_high)},
            {"inWindow", c.in_window}};
}

Json to_json(const MarkedChain& mc) {
    return {{"left", mc.left}, {"c", mc.c}, {"right", mc.right}, {"text", to_string(mc)}};
}

Json to_json(const WahlSplit& s) {
    return {{"chain", to_json(s.chain)},
            {"left", Json::array({rat(s.left.p), rat(s.left.q)})},
            {"right", Json::array({rat(s.right.p), rat(s.right.q)})}};
}

Json to_json(const K1AReport& r) {
    Json edges = Json::array();
    for (const auto& e : r.edges)
        edges.push_back({{"direction", to_json(e.direction)}, {"selfIntersection", e.self_intersection}});
    Json j = {{"cut", to_json(r.cut)},
              {"vertex", Json::array({rat(r.vertex.P), rat(r.vertex.Q)})},
              {"edges", edges},
              {"match", nullptr}};
    if (r.match)
        j["match"] = {{"index", r.match->index},
                      {"direction", to_json(r.match->direction)},
                      {"selfIntersection", r.match->self_intersection}};
    return j;
}

Chain chain_from_json(const Json& j) {
    if (j.is_string()) return parse_chain(j.get<std::string>());
    if (!j.is_array()) throw ValidationError("bad-chain", "a chain is an array of integers");
    Chain c;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ValidationError("bad-chain", "chain entries must be integers");
        c.push_back(v.get<std::int64_t>());
    }
    return c;
}

MarkedChain marked_chain_from_json(const Json& j) {
    if (j.is_string()) return parse_marked_chain(j.get<std::string>());
    const Json& c = field(j, "c");
    if (!c.is_number_integer()) throw ValidationError("bad-chain", "c must be an integer");
    return MarkedChain{chain_from_json(field(j, "left")), c.get<std::int64_t>(), chain_from_json(field(j, "right"))};
}

MoveScript script_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("bad-script", "a script is an array of moves");
    MoveScript s;
    for (const auto& m : j) {
        std::string op = field(m, "op").is_string() ? m.at("op").get<std::string>() : "";
        if (op != "up" && op != "down") throw ValidationError("bad-script", "op must be \"up\" or \"down\"");
        const Json& at = field(m, "at");
        if (!at.is_number_unsigned()) throw ValidationError("bad-script", "at must be a nonnegative integer");
        Move mv{op == "up" ? Move::Kind::BlowUp : Move::Kind::BlowDown, at.get<std::size_t>(), std::nullopt};
        if (m.contains("expect")) mv.expected = chain_from_json(m.at("expect"));
        s.push_back(mv);
    }
    return s;
}

Json to_json(const MoveScript& s) {
    Json out = Json::array();
    for (const auto& m : s) {
        Json j = {{"op", m.kind == Move::Kind::BlowUp ? "up" : "down"}, {"at", m.at}};
        if (m.expected) j["expect"] = *m.expected;
        out.push_back(j);
    }
    return out;
}

std::string error_code(const Error& e) {
    if (auto* v = dynamic_cast<const ValidationError*>(&e)) return v->code();
    if (auto* p = dynamic_cast<const PreconditionError*>(&e)) return p->code();
    return "internal";
}

Json error_json(const Error& e) {
    Json j = {{"error", error_code(e)}, {"message", e.what()}};
    if (auto* nm = dynamic_cast<const NotMutable*>(&e)) j["witness"] = to_json(nm->witness());
    return j;
}

} // namespace atoric
