#include "atoric/workbench/polynomial.hpp"

#include "atoric/errors.hpp"

#include <algorithm>

namespace atoric {

Polynomial1V::Polynomial1V(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial1V::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial1V operator+(const Polynomial1V& a, const Polynomial1V& b) {
    std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial1V(std::move(c));
}

Polynomial1V operator-(const Polynomial1V& a, const Polynomial1V& b) {
    std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial1V(std::move(c));
}

Polynomial1V operator*(const Polynomial1V& a, const Polynomial1V& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial1V(std::move(c));
}

Polynomial1V Polynomial1V::derivative() const {
    std::vector<BigRational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * BigRational(static_cast<long>(i)));
    return Polynomial1V(std::move(d));
}

Polynomial1V Polynomial1V::monic() const {
    if (is_zero()) return {};
    std::vector<BigRational> c = c_;
    BigRational lead = c.back();
    for (auto& x : c) x /= lead;
    return Polynomial1V(std::move(c));
}

std::pair<Polynomial1V, Polynomial1V> divmod(const Polynomial1V& a, const Polynomial1V& b) {
    if (b.is_zero()) throw ValidationError("division-by-zero", "polynomial division by zero");
    std::vector<BigRational> r = a.coeffs();
    int db = b.degree();
    std::vector<BigRational> q(std::max(0, a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        BigRational f = r[k] / b.leading();
        q[k - db] = f;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
    }
    return {Polynomial1V(std::move(q)), Polynomial1V(std::move(r))};
}

Polynomial1V gcd(Polynomial1V a, Polynomial1V b) {
    while (!b.is_zero()) {
        Polynomial1V r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::optional<Polynomial1V> exact_sqrt(const Polynomial1V& p) {
    if (p.is_zero()) return Polynomial1V{};
    if (p.degree() % 2 != 0) return std::nullopt;
    const BigRational& lead = p.leading();
    if (lead < 0) return std::nullopt;
    auto num = atoric::exact_sqrt(lead.get_num());
    auto den = atoric::exact_sqrt(lead.get_den());
    if (!num || !den) return std::nullopt;

    // Top-down: s_n from the leading term, then each lower coefficient from the
    // matching coefficient of p.
    int n = p.degree() / 2;
    std::vector<BigRational> s(n + 1);
    s[n] = make_rational(*num, *den);
    for (int k = n - 1; k >= 0; --k) {
        BigRational acc = p.coeffs()[n + k];
        for (int i = k + 1; i < n; ++i) acc -= s[i] * s[n + k - i];
        s[k] = acc / (2 * s[n]);
    }
    Polynomial1V root(std::move(s));
    if (root * root != p) return std::nullopt;
    return root;
}

bool is_squarefree(const Polynomial1V& p) { return gcd(p, p.derivative()).degree() == 0; }

namespace {

std::string plain(const BigRational& x) { return is_integer(x) ? x.get_num().get_str() : to_string(x); }

std::string term(const BigRational& c, int power, char var, bool first) {
    std::string s;
    BigRational m = c < 0 ? BigRational(-c) : c;
    if (c < 0) s += first ? "-" : " - ";
    else if (!first) s += " + ";
    bool unit = m == 1;
    if (!unit || power == 0) s += plain(m);
    if (power > 0) s += var;
    if (power > 1) s += "^" + std::to_string(power);
    return s;
}

} // namespace

std::string to_string(const Polynomial1V& p, char var) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeffs()[i] != 0) s += term(p.coeffs()[i], i, var, s.empty());
    return s;
}

Polynomial2V::Polynomial2V(Terms terms) {
    for (auto& [k, v] : terms)
        if (v != 0) t_.emplace(k, v);
}

Polynomial1V Polynomial2V::at_x(const BigRational& x0) const {
    std::vector<BigRational> c;
    for (const auto& [k, v] : t_) {
        auto [i, j] = k;
        BigRational xp = 1;
        for (int e = 0; e < i; ++e) xp *= x0;
        if (static_cast<int>(c.size()) <= j) c.resize(j + 1);
        c[j] += v * xp;
    }
    return Polynomial1V(std::move(c));
}

Polynomial1V Polynomial2V::on_diagonal() const {
    std::vector<BigRational> c;
    for (const auto& [k, v] : t_) {
        int d = k.first + k.second;
        if (static_cast<int>(c.size()) <= d) c.resize(d + 1);
        c[d] += v;
    }
    return Polynomial1V(std::move(c));
}

std::string to_string(const Polynomial2V& p) {
    // Graded by total degree, then by the power of x.
    std::vector<std::pair<std::pair<int, int>, BigRational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        return da != db ? da < db : a.first.first > b.first.first;
    });
    std::string s;
    for (const auto& [k, v] : terms) {
        BigRational m = v < 0 ? BigRational(-v) : v;
        s += v < 0 ? (s.empty() ? "-" : " - ") : (s.empty() ? "" : " + ");
        std::string mono;
        if (k.first > 0) mono += "x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) mono += "y" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        if (m != 1 || mono.empty()) s += plain(m);
        s += mono;
    }
    return s.empty() ? "0" : s;
}

bool BranchCurveReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CurveCheck& c) { return c.pass; });
}

Polynomial2V branch_curve_fixture() {
    return Polynomial2V({{{0, 0}, 1}, {{0, 3}, -2}, {{0, 6}, 1}, {{3, 0}, 2},
                         {{1, 5}, -1}, {{5, 1}, -2}, {{6, 6}, 1}});
}

BranchCurveReport verify_branch_curve(const Polynomial2V& f) {
    BranchCurveReport r{to_string(f), {}};
    auto check = [&](std::string name, char var, Polynomial1V restriction, Polynomial1V expected) {
        CurveCheck c{std::move(name), var, std::move(restriction), std::move(expected), std::nullopt, false, false};
        c.root = exact_sqrt(c.restriction);
        // The root is only defined up to sign; take the one with positive constant term.
        if (c.root && !c.root->is_zero() && c.root->coeffs()[0] < 0) c.root = Polynomial1V{} - *c.root;
        if (c.root) c.squarefree_root = is_squarefree(*c.root);
        c.pass = c.root && c.squarefree_root && *c.root == c.expected_root;
        r.checks.push_back(std::move(c));
    };
    check("x=0", 'y', f.at_x(0), Polynomial1V({1, 0, 0, -1}));
    check("y=x", 'x', f.on_diagonal(), Polynomial1V({1, 0, 0, 0, 0, 0, -1}));
    return r;
}

} // namespace atoric
