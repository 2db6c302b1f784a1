#pragma once

#include "atoric/rational.hpp"

#include <compare>
#include <utility>

namespace atoric {

// a + b*sqrt(d) with d >= 0. Arithmetic between surds requires equal d.
class QuadraticSurd {
public:
    QuadraticSurd(BigRational a, BigRational b, BigInt d);
    static QuadraticSurd rational(const BigRational& a, const BigInt& d) { return {a, 0, d}; }

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }
    const BigInt& d() const { return d_; }

    int sign() const;
    bool is_rational() const; // b == 0 or d a perfect square
    QuadraticSurd conjugate() const { return {a_, -b_, d_}; }
    QuadraticSurd inverse() const; // throws ValidationError on zero

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const BigRational& k, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x) { return {-x.a_, -x.b_, x.d_}; }

    // Structural equality (same a, b, d); use surd_cmp for numeric equality.
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

    // Largest convergent-based rational r with r <= value (r < value if irrational),
    // taken from the lower continued-fraction convergents with denominator <= max_den.
    BigRational lower_bound(const BigInt& max_den) const;
    BigRational upper_bound(const BigInt& max_den) const;
    std::string to_decimal(int digits) const; // display only
    double to_double() const;                  // display only

private:
    BigRational a_, b_;
    BigInt d_;
};

std::strong_ordering surd_cmp(const QuadraticSurd& x, const QuadraticSurd& y);
std::strong_ordering surd_cmp(const QuadraticSurd& x, const BigRational& y);

// (lambda_minus, lambda_plus) = (delta -/+ sqrt(delta^2 - 4)) / 2.
std::pair<QuadraticSurd, QuadraticSurd> eigenvalues(const BigInt& delta);

std::string to_string(const QuadraticSurd& x); // "a + b*sqrt(d)" with rational strings

} // namespace atoric
