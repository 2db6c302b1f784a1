#include "atoric/surd.hpp"

#include "atoric/errors.hpp"

#include <cmath>

namespace atoric {

namespace {

BigInt common_d(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.d() == y.d() || y.b() == 0) return x.d();
    if (x.b() == 0) return y.d();
    throw ValidationError("discriminant-mismatch",
                          "surds with discriminants " + x.d().get_str() + " and " + y.d().get_str());
}

// floor(x) for x = a + b*sqrt(d), exact.
BigInt surd_floor(const QuadraticSurd& x) {
    BigInt L = lcm(x.a().get_den(), x.b().get_den());
    BigInt A = x.a().get_num() * (L / x.a().get_den());
    BigInt B = x.b().get_num() * (L / x.b().get_den());
    BigInt N = B * B * x.d();
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), N.get_mpz_t());
    BigInt n = floor_div(B >= 0 ? BigInt(A + s) : BigInt(A - s - 1), L);
    while (surd_cmp(x, BigRational(n)) < 0) --n;
    while (surd_cmp(x, BigRational(n + 1)) >= 0) ++n;
    return n;
}

// Convergents h/k of the regular continued fraction of x, stopping once k > max_den.
template <class F>
void for_each_convergent(QuadraticSurd x, const BigInt& max_den, F&& visit) {
    BigInt h0 = 1, h1 = 0, k0 = 0, k1 = 1; // h_{-1}, h_{-2}
    for (int index = 0;; ++index) {
        BigInt n = surd_floor(x);
        BigInt h = n * h0 + h1, k = n * k0 + k1;
        if (k > max_den) return;
        QuadraticSurd frac = x - QuadraticSurd::rational(BigRational(n), x.d());
        bool exact = frac.sign() == 0;
        visit(index, make_rational(h, k), exact);
        if (exact) return;
        h1 = h0; h0 = h; k1 = k0; k0 = k;
        x = frac.inverse();
    }
}

} // namespace

QuadraticSurd::QuadraticSurd(BigRational a, BigRational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw ValidationError("negative-discriminant", "surd discriminant must be >= 0");
}

int QuadraticSurd::sign() const {
    int sa = sgn(a_);
    int sb = d_ == 0 ? 0 : sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    BigRational lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

bool QuadraticSurd::is_rational() const { return b_ == 0 || exact_sqrt(d_).has_value(); }

QuadraticSurd QuadraticSurd::inverse() const {
    if (sign() == 0) throw ValidationError("division-by-zero", "inverse of zero surd");
    if (auto r = exact_sqrt(d_); b_ == 0 || r) {
        BigRational v = a_ + b_ * BigRational(r ? *r : BigInt(0));
        return {1 / v, 0, d_};
    }
    BigRational norm = a_ * a_ - b_ * b_ * d_;
    return {a_ / norm, -b_ / norm, d_};
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, common_d(x, y)};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, common_d(x, y)};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    BigInt d = common_d(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticSurd operator*(const BigRational& k, const QuadraticSurd& y) {
    return {k * y.a_, k * y.b_, y.d_};
}

BigRational QuadraticSurd::lower_bound(const BigInt& max_den) const {
    std::optional<BigRational> best;
    for_each_convergent(*this, max_den, [&](int index, const BigRational& c, bool exact) {
        if (index % 2 == 0 || exact) best = c;
    });
    if (!best) return BigRational(surd_floor(*this));
    return *best;
}

BigRational QuadraticSurd::upper_bound(const BigInt& max_den) const {
    std::optional<BigRational> best;
    for_each_convergent(*this, max_den, [&](int index, const BigRational& c, bool exact) {
        if (index % 2 == 1 || exact) best = c;
    });
    if (!best) return BigRational(surd_floor(*this) + 1);
    return *best;
}

std::string QuadraticSurd::to_decimal(int digits) const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt n = surd_floor(BigRational(scale) * *this);
    bool neg = n < 0;
    if (neg) n = -n;
    std::string s = n.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

double QuadraticSurd::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::strong_ordering surd_cmp(const QuadraticSurd& x, const QuadraticSurd& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering surd_cmp(const QuadraticSurd& x, const BigRational& y) {
    return surd_cmp(x, QuadraticSurd::rational(y, x.d()));
}

std::pair<QuadraticSurd, QuadraticSurd> eigenvalues(const BigInt& delta) {
    if (delta < 2) throw ValidationError("delta-too-small", "eigenvalues need delta >= 2, got " + delta.get_str());
    BigInt d = delta * delta - 4;
    BigRational half = make_rational(delta, 2);
    BigRational r = make_rational(1, 2);
    return {QuadraticSurd(half, -r, d), QuadraticSurd(half, r, d)};
}

namespace {
std::string short_rational(const BigRational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : to_string(q);
}
} // namespace

std::string to_string(const QuadraticSurd& x) {
    std::string root = "sqrt(" + x.d().get_str() + ")";
    if (x.b() == 0) return short_rational(x.a());
    if (auto r = exact_sqrt(x.d())) return short_rational(x.a() + x.b() * BigRational(*r));
    std::string coeff = short_rational(BigRational(abs(x.b())));
    std::string tail = (coeff == "1" ? "" : coeff + "*") + root;
    if (x.a() == 0) return (x.b() < 0 ? "-" : "") + tail;
    return short_rational(x.a()) + (x.b() < 0 ? " - " : " + ") + tail;
}

} // namespace atoric
