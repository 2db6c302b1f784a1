#include "atoric/flip.hpp"

#include "atoric/errors.hpp"

namespace atoric {

const char* to_string(FlipResult::Kind k) {
    return k == FlipResult::Kind::FlipTo ? "FlipTo" : "DivisorialContraction";
}

AntiflipResult initial_antiflip(const WedgeParams& plus, const BigRational& a_minus) {
    if (a_minus <= 0) throw ValidationError("nonpositive-length", "a- must be positive");
    // Local names: plus = Pi(p0, q0, p1, q1, c).
    const BigInt &p0 = plus.p1, &p1 = plus.p2, &q1 = plus.q2;
    BigInt delta = sigma(plus);
    if (delta <= 0) throw PreconditionError("not-k-positive", to_string(plus) + " is not K-positive");
    bool adjusted = p1 == 1 && q1 == 1;
    BigInt q1a = adjusted ? BigInt(0) : q1;
    BigInt p2 = delta * p1 + p0;
    BigInt num = delta + p2 * q1a;
    if (num % p1 != 0) throw InternalError("antiflip divisibility p1 | (delta + p2 q1') failed for " + to_string(plus));
    WedgeParams minus = validate(p1, q1a, p2, num / p1, 1, a_minus);

    WedgeInvariants before = invariants(plus), after = invariants(minus);
    if (before.Delta != after.Delta || before.Omega != after.Omega || after.sigma != -before.sigma)
        throw InternalError("antiflip changed (Delta, Omega) or failed to negate sigma for " + to_string(plus));
    return {plus, minus, delta, adjusted};
}

AntiflipInBounds antiflip_in_bounds(const WedgeParams& plus, const BigRational& l1, const BigRational& l2,
                                    const BigRational& a_minus, std::size_t budget_steps) {
    if (l1 <= 0 || l2 <= 0) throw ValidationError("nonpositive-length", "bounds must be positive");
    if (a_minus <= 0) throw ValidationError("nonpositive-length", "a- must be positive");
    if (a_minus >= l2)
        throw PreconditionError("no-room", "a- = " + to_string(a_minus) + " needs l2 > a-; deficit " +
                                               to_string(BigRational(a_minus - l2)));
    AntiflipResult r = initial_antiflip(plus, a_minus);
    BigRational nl2 = l2 - a_minus;
    if (!is_infinitely_right_mutable(r.minus))
        throw PreconditionError("not-infinitely-mutable",
                                to_string(r.minus) + " is not infinitely right-mutable (delta = " +
                                    r.delta_used.get_str() + ")");
    Budget b = budget(r.minus, nl2, budget_steps);
    bool certified = b.verdict == Budget::Verdict::FitsForever;
    return {std::move(r), l1 + plus.a, nl2, std::move(b), certified};
}

namespace {

[[noreturn]] void no_flip(const WedgeParams& w, const std::string& why) {
    throw PreconditionError("no-integral-flip", "no integral flip of " + to_string(w) + ": " + why);
}

} // namespace

FlipResult flip(const WedgeParams& minus, const BigRational& a_plus) {
    if (a_plus <= 0) throw ValidationError("nonpositive-length", "a+ must be positive");
    if (sigma(minus) >= 0) throw PreconditionError("not-k-negative", to_string(minus) + " is not K-negative");
    if (minus.c != 1) throw PreconditionError("shear-not-one", to_string(minus) + " has c != 1");

    FlipResult out{FlipResult::Kind::FlipTo, {}, {}, {minus}};
    BigInt delta = mutation_delta(minus);
    while (true) {
        const WedgeParams& cur = out.descent.back();
        Mutability m = classify(cur, Side::Left);
        if (m.status != MutabilityStatus::Mutable) break;
        if (delta >= 2 && cur.p1 > cur.p2)
            throw PreconditionError("descent-diverges", to_string(cur) +
                                                            " is infinitely left-mutable; flip its mirror image instead");
        if (out.descent.size() > 64) throw InternalError("left descent did not terminate");
        out.descent.push_back(mutate(cur, Side::Left));
    }
    const WedgeParams& w = out.descent.back();
    if (classify(w, Side::Left).status == MutabilityStatus::Borderline) {
        out.kind = FlipResult::Kind::DivisorialContraction;
        out.sphere = minus_one_sphere(w, Side::Right);
        return out;
    }

    BigInt p0 = w.p2 - delta * w.p1;
    if (p0 <= 0) no_flip(w, "p0 = p2 - delta p1 = " + p0.get_str() + " <= 0");
    BigInt q1 = w.p1 == 1 ? BigInt(1) : w.q1;
    BigInt num = delta + p0 * q1;
    if (num % w.p1 != 0) no_flip(w, "p1 does not divide delta + p0 q1");
    BigInt q0 = mod_floor(num / w.p1, p0);
    if (gcd(p0, q0) != 1) no_flip(w, "gcd(p0, q0) != 1");
    BigInt cnum = delta - w.p1 * q0 + p0 * q1;
    if (cnum % (p0 * w.p1) != 0) no_flip(w, "shear is not integral");
    BigInt c = cnum / (p0 * w.p1) + 1;
    if (c < 1) no_flip(w, "shear c = " + c.get_str() + " < 1");
    WedgeParams plus;
    try {
        plus = validate(p0, q0, w.p1, q1, c, a_plus);
    } catch (const ValidationError& e) {
        no_flip(w, e.what());
    }
    AntiflipResult back = initial_antiflip(plus, w.a);
    if (!(back.minus == w)) no_flip(w, "candidate " + to_string(plus) + " antiflips to " + to_string(back.minus));
    out.plus = plus;
    return out;
}

CohomologyPath cohomology_path(const WedgeParams& plus, const BigRational& a_minus, const BigRational& l2) {
    BigInt delta = sigma(plus);
    if (delta <= 0) throw PreconditionError("not-k-positive", to_string(plus) + " is not K-positive");
    BigRational canonical = make_rational(delta, plus.p1 * plus.p2);
    if (plus.a != canonical)
        throw PreconditionError("not-canonically-normalized",
                                "a+ = " + to_string(plus.a) + " but delta/(p0 p1) = " + to_string(canonical));
    if (delta < 2) throw PreconditionError("delta-too-small", "the gap window needs delta >= 2");
    AntiflipResult r = initial_antiflip(plus, a_minus);
    BigInt pp = r.minus.p1 * r.minus.p2;
    CohomologyPath out{delta, BigRational(delta), -a_minus * pp, 0, max_antiflip_param(l2, delta).exact,
                       QuadraticSurd(0, 0, 0), false};
    out.affine_distance = out.start - out.end;
    out.gap_high = QuadraticSurd::rational(BigRational(delta), out.cap.d()) + BigRational(pp) * out.cap;
    out.in_window = out.affine_distance > out.start && surd_cmp(out.gap_high, out.affine_distance) > 0;
    return out;
}

} // namespace atoric
