#include "atoric/rational.hpp"

#include "atoric/errors.hpp"

#include <limits>

namespace atoric {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("zero-denominator", "rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigInt parse_int(std::string_view text) {
    std::string s(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw ValidationError("bad-integer", "not an integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw ValidationError("bad-integer", "not an integer: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero-denominator", "zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw ValidationError("division-by-zero", "integer division by zero");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw ValidationError("division-by-zero", "integer division by zero");
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    if (m == 0) throw ValidationError("division-by-zero", "modulus zero");
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n) return std::nullopt;
    return r;
}

int sign(const BigInt& x) { return sgn(x); }
int sign(const BigRational& x) { return sgn(x); }

std::int64_t to_int64(const BigInt& x) {
    if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max())
        throw ValidationError("int-overflow", "value " + x.get_str() + " exceeds 64-bit range");
    return static_cast<std::int64_t>(x.get_si());
}

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

ExtRational ExtRational::from_homogeneous(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        if (num == 0) throw ValidationError("indeterminate", "0/0 is not a projective point");
        return infinity();
    }
    return ExtRational(make_rational(num, den));
}

const BigRational& ExtRational::value() const {
    if (!value_) throw ValidationError("infinite", "value requested of the point at infinity");
    return *value_;
}

std::string to_string(const ExtRational& x) {
    return x.is_infinite() ? std::string("inf") : to_string(x.value());
}

} // namespace atoric
