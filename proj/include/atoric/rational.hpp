#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace atoric {

using BigInt = mpz_class;
using BigRational = mpq_class; // gmp keeps results canonical; constructors go through make_rational

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational parse_rational(std::string_view text);
BigInt parse_int(std::string_view text);

// Always "num/den", also for integers.
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& m); // result in [0, |m|)
std::optional<BigInt> exact_sqrt(const BigInt& n);
int sign(const BigInt& x);
int sign(const BigRational& x);
std::int64_t to_int64(const BigInt& x); // throws ValidationError if out of range
bool is_integer(const BigRational& x);

// A rational or the single projective point at infinity.
class ExtRational {
public:
    ExtRational(BigRational v) : value_(std::move(v)) {}
    static ExtRational infinity() { return ExtRational(); }
    // num/den with den == 0 and num != 0 gives infinity.
    static ExtRational from_homogeneous(const BigInt& num, const BigInt& den);

    bool is_infinite() const { return !value_.has_value(); }
    const BigRational& value() const;

    friend bool operator==(const ExtRational& a, const ExtRational& b) = default;

private:
    ExtRational() = default;
    std::optional<BigRational> value_;
};

std::string to_string(const ExtRational& x); // "inf" for infinity

} // namespace atoric
