#pragma once

#include "atoric/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atoric {

// Dense univariate polynomial, coefficient i of x^i; trailing zeros trimmed.
class Polynomial1V {
public:
    Polynomial1V() = default;
    explicit Polynomial1V(std::vector<BigRational> coeffs);

    const std::vector<BigRational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const BigRational& leading() const { return c_.back(); }

    friend Polynomial1V operator+(const Polynomial1V& a, const Polynomial1V& b);
    friend Polynomial1V operator-(const Polynomial1V& a, const Polynomial1V& b);
    friend Polynomial1V operator*(const Polynomial1V& a, const Polynomial1V& b);
    friend bool operator==(const Polynomial1V&, const Polynomial1V&) = default;

    Polynomial1V derivative() const;
    Polynomial1V monic() const;

private:
    void trim();
    std::vector<BigRational> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial1V, Polynomial1V> divmod(const Polynomial1V& a, const Polynomial1V& b);
Polynomial1V gcd(Polynomial1V a, Polynomial1V b); // monic, or zero
// s with s*s = p and positive leading coefficient, if one exists over Q.
std::optional<Polynomial1V> exact_sqrt(const Polynomial1V& p);
bool is_squarefree(const Polynomial1V& p);
std::string to_string(const Polynomial1V& p, char var = 'x');

// Sparse bivariate polynomial keyed by (i, j) for x^i y^j.
class Polynomial2V {
public:
    using Terms = std::map<std::pair<int, int>, BigRational>;
    Polynomial2V() = default;
    explicit Polynomial2V(Terms terms);
    const Terms& terms() const { return t_; }

    Polynomial1V at_x(const BigRational& x0) const;    // f(x0, y) as a polynomial in y
    Polynomial1V on_diagonal() const;                  // f(x, x)

private:
    Terms t_;
};
std::string to_string(const Polynomial2V& p);

struct CurveCheck {
    std::string name;         // "x=0", "y=x"
    char var;                 // variable left after restricting
    Polynomial1V restriction;
    Polynomial1V expected_root;
    std::optional<Polynomial1V> root;
    bool squarefree_root = false;
    bool pass = false;
};

struct BranchCurveReport {
    std::string curve;
    std::vector<CurveCheck> checks;
    bool pass() const;
};

// 1 - 2y^3 + y^6 + 2x^3 - x y^5 - 2x^5 y + x^6 y^6
Polynomial2V branch_curve_fixture();
// Restrictions to x = 0 and y = x must be (1 - y^3)^2 and (1 - x^6)^2, with squarefree roots,
// i.e. three and six tangency points.
BranchCurveReport verify_branch_curve(const Polynomial2V& f = branch_curve_fixture());

} // namespace atoric
