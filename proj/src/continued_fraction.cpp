#include "atoric/continued_fraction.hpp"

#include "atoric/errors.hpp"

#include <algorithm>
#include <regex>

namespace atoric {

Chain MarkedChain::concatenated() const {
    Chain out = left;
    out.push_back(c);
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

bool is_canonical(const Chain& chain) {
    return std::all_of(chain.begin(), chain.end(), [](std::int64_t b) { return b >= 2; });
}

ExtRational cf_eval(const Chain& chain) {
    BigInt n = 1, d = 0;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        BigInt next = BigInt(static_cast<long>(*it)) * n - d;
        d = n;
        n = next;
    }
    return ExtRational::from_homogeneous(n, d);
}

bool cf_well_defined(const Chain& chain) {
    BigInt n = 1, d = 0;
    for (std::size_t i = chain.size(); i-- > 1;) {
        BigInt next = BigInt(static_cast<long>(chain[i])) * n - d;
        d = n;
        n = next;
        if (n == 0) return false;
    }
    return true;
}

Chain cf_expand(const BigRational& x) {
    if (x <= 1) throw ValidationError("cf-domain", "cf_expand needs x > 1, got " + to_string(x));
    BigInt P = x.get_num(), Q = x.get_den();
    Chain out;
    while (true) {
        BigInt b = ceil_div(P, Q);
        out.push_back(to_int64(b));
        BigInt r = b * Q - P;
        if (r == 0) break;
        P = Q;
        Q = r;
    }
    return out;
}

Chain wahl_chain(const BigInt& p, const BigInt& q) {
    if (p == 1 && (q == 0 || q == 1)) return {};
    if (p < 1) throw ValidationError("wahl-range", "Wahl p must be positive, got " + p.get_str());
    if (gcd(p, q) != 1) throw ValidationError("wahl-not-coprime", "gcd(" + p.get_str() + "," + q.get_str() + ") != 1");
    if (q <= 0 || q >= p) throw ValidationError("wahl-range", "Wahl q must satisfy 0 < q < p");
    return cf_expand(make_rational(p * p, p * q - 1));
}

std::optional<WahlPair> recognize_wahl(const Chain& chain) {
    if (chain.empty() || !is_canonical(chain)) return std::nullopt;
    ExtRational v = cf_eval(chain);
    if (v.is_infinite()) return std::nullopt;
    const BigRational& x = v.value();
    auto p = exact_sqrt(x.get_num());
    if (!p || *p < 2) return std::nullopt;
    BigInt qp = x.get_den() + 1;
    if (qp % *p != 0) return std::nullopt;
    BigInt q = qp / *p;
    if (q <= 0 || q >= *p || gcd(*p, q) != 1) return std::nullopt;
    return WahlPair{*p, q};
}

std::string to_string(const Chain& chain) {
    std::string s = "[";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(chain[i]);
    }
    return s + "]";
}

std::string to_string(const MarkedChain& mc) {
    return to_string(mc.left) + "-" + std::to_string(mc.c) + "-" + to_string(mc.right);
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    return s;
}

Chain parse_entries(const std::string& body) {
    Chain out;
    if (body.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = body.find(',', start);
        std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(to_int64(parse_int(item)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Chain parse_chain(std::string_view text) {
    std::string s = strip_spaces(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw ValidationError("bad-chain", "unbalanced brackets in '" + s + "'");
        s = s.substr(1, s.size() - 2);
    }
    return parse_entries(s);
}

MarkedChain parse_marked_chain(std::string_view text) {
    static const std::regex re(R"(^\[([-0-9,]*)\]-(-?[0-9]+)-\[([-0-9,]*)\]$)");
    std::string s = strip_spaces(text);
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw ValidationError("bad-chain", "expected [l,...]-c-[r,...], got '" + s + "'");
    return MarkedChain{parse_entries(m[1]), to_int64(parse_int(m[2].str())), parse_entries(m[3])};
}

} // namespace atoric
