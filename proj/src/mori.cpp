#include "atoric/mori.hpp"

#include "atoric/errors.hpp"
#include "atoric/mutate.hpp"

namespace atoric {

const char* to_string(Asymptotics a) {
    switch (a) {
    case Asymptotics::IncreasingToLambdaPlus: return "IncreasingToLambdaPlus";
    case Asymptotics::DecreasingTerminating: return "DecreasingTerminating";
    default: return "BetweenEigenrays";
    }
}

const char* to_string(Budget::Verdict v) {
    switch (v) {
    case Budget::Verdict::FitsForever: return "FitsForever";
    case Budget::Verdict::FitsUpTo: return "FitsUpTo";
    case Budget::Verdict::Exceeds: return "Exceeds";
    case Budget::Verdict::ExceedsAtInfinity: return "ExceedsAtInfinity";
    default: return "UnboundedRoomRequired";
    }
}

std::vector<MoriPair> MoriSequence::display_pairs() const {
    std::vector<MoriPair> out = pairs;
    for (auto& pr : out)
        if (pr.p == 1) pr.q = 1;
    return out;
}

BigInt seed_Delta(const MoriSeed& s) { return s.p1 * s.p1 + s.p2 * s.p2 - s.delta * s.p1 * s.p2; }

MoriSeed validate_seed(const BigInt& p1, const BigInt& q1, const BigInt& p2, const BigInt& q2) {
    if (p1 < 1 || p2 < 1) throw ValidationError("seed-out-of-range", "seed p-values must be positive");
    if (q1 < 0 || q1 > p1 || q2 < 0 || q2 > p2) throw ValidationError("seed-out-of-range", "seed needs 0 <= q <= p");
    if (gcd(p1, q1) != 1 || gcd(p2, q2) != 1) throw ValidationError("seed-not-coprime", "seed pairs must be coprime");
    MoriSeed s{p1, q1, p2, q2, p1 * q2 - p2 * q1};
    if (s.delta <= 0)
        throw ValidationError("seed-delta-nonpositive", "delta = p1 q2 - p2 q1 = " + s.delta.get_str() + " <= 0");
    if (seed_Delta(s) <= 0)
        throw ValidationError("seed-rays-intersect", "p1^2 + p2^2 - delta p1 p2 = " + seed_Delta(s).get_str() + " <= 0");
    MarkedChain mc{wahl_chain(p1, q1), 1, wahl_chain(p2, q2)};
    if (!cf_well_defined(mc.concatenated()))
        throw ValidationError("seed-ill-defined", "continued fraction of " + to_string(mc) + " divides by zero");
    return s;
}

MoriSeed seed_of(const WedgeParams& w) { return validate_seed(w.p1, w.q1, w.p2, w.q2); }

MoriSequence generate(const MoriSeed& seed, std::size_t n) {
    MoriSequence out{seed, {{seed.p1, seed.q1}, {seed.p2, seed.q2}}, classify_asymptotics(seed, 0).region, false};
    while (out.pairs.size() < n) {
        const auto& a = out.pairs[out.pairs.size() - 2];
        const auto& b = out.pairs.back();
        MoriPair next{seed.delta * b.p - a.p, seed.delta * b.q - a.q};
        if (next.p <= 0) {
            out.terminated = true;
            break;
        }
        out.pairs.push_back(std::move(next));
    }
    if (out.pairs.size() > n) out.pairs.resize(n);
    return out;
}

AsymptoticReport classify_asymptotics(const MoriSeed& seed, std::size_t ratio_terms) {
    AsymptoticReport rep{Asymptotics::BetweenEigenrays, {}, {}, {}};
    if (seed.delta < 2) {
        rep.region = Asymptotics::DecreasingTerminating;
        // Elliptic case: the recursion has period 6, so it leaves the quadrant quickly.
        BigInt a = seed.p1, b = seed.p2;
        for (int i = 0; i < 6 && b > 0; ++i) {
            BigInt c = seed.delta * b - a;
            a = b;
            b = c;
        }
        if (b > 0) throw InternalError("delta = 1 recursion stayed positive");
        return rep;
    }
    auto [lm, lp] = eigenvalues(seed.delta);
    rep.lambda_minus = lm;
    rep.lambda_plus = lp;
    QuadraticSurd p2 = QuadraticSurd::rational(BigRational(seed.p2), lp.d());
    if (surd_cmp(p2, BigRational(seed.p1) * lp) > 0) rep.region = Asymptotics::IncreasingToLambdaPlus;
    else if (surd_cmp(p2, BigRational(seed.p1) * lm) < 0) rep.region = Asymptotics::DecreasingTerminating;
    if (rep.region == Asymptotics::IncreasingToLambdaPlus && ratio_terms > 0) {
        BigInt a = seed.p1, b = seed.p2;
        for (std::size_t i = 0; i < ratio_terms; ++i) {
            rep.ratios.push_back(make_rational(b, a));
            BigInt c = seed.delta * b - a;
            a = b;
            b = c;
        }
    }
    return rep;
}

bool is_infinitely_right_mutable(const WedgeParams& w) {
    if (sigma(w) >= 0) throw PreconditionError("not-k-negative", "wedge " + to_string(w) + " is not K-negative");
    if (w.c != 1) throw PreconditionError("shear-not-one", "wedge " + to_string(w) + " has c != 1");
    return mutation_delta(w) >= 2 && w.p1 <= w.p2;
}

Budget budget(const WedgeParams& w, const BigRational& l2, std::size_t n) {
    if (!is_infinitely_right_mutable(w))
        throw PreconditionError("not-infinitely-mutable", to_string(w) + " is not infinitely right-mutable");
    if (l2 <= 0) throw ValidationError("nonpositive-length", "l2 must be positive");
    Budget b{w.a, l2, mutation_delta(w), {}, {}, {}, Budget::Verdict::FitsUpTo, 0, {}};
    MoriSequence seq = generate(seed_of(w), n + 2);
    BigRational a = w.a, sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        // a_1 = a p_1/p_3, a_k = a_{k-1} p_k / p_{k+2}
        a = a * seq.pairs[k - 1].p / seq.pairs[k + 1].p;
        sum += a;
        b.consumed.push_back(a);
        b.partial_sums.push_back(sum);
        if (!b.overflow_step && sum >= l2) b.overflow_step = k;
    }
    b.fits = b.overflow_step ? *b.overflow_step - 1 : n;

    if (b.delta >= 3) {
        auto lp = eigenvalues(b.delta).second;
        QuadraticSurd denom = lp * lp - QuadraticSurd::rational(1, lp.d());
        b.bound = w.a * denom.inverse();
        auto c = surd_cmp(*b.bound, l2);
        for (const auto& s : b.partial_sums)
            if (surd_cmp(*b.bound, s) <= 0) throw InternalError("budget partial sum reached the closed-form bound");
        if (c < 0) {
            b.verdict = Budget::Verdict::FitsForever;
            return b;
        }
        if (c == 0 && !b.overflow_step) {
            b.verdict = Budget::Verdict::ExceedsAtInfinity;
            return b;
        }
    } else if (!b.overflow_step) {
        b.verdict = Budget::Verdict::UnboundedRoomRequired;
        return b;
    }
    b.verdict = (b.overflow_step && b.fits == 0) ? Budget::Verdict::Exceeds : Budget::Verdict::FitsUpTo;
    return b;
}

AntiflipCap max_antiflip_param(const BigRational& l2, const BigInt& delta) {
    if (delta < 2) throw ValidationError("delta-too-small", "antiflip cap needs delta >= 2");
    if (l2 <= 0) throw ValidationError("nonpositive-length", "l2 must be positive");
    if (delta == 2) return {QuadraticSurd(0, 0, 0), 0};
    auto lm = eigenvalues(delta).first;
    QuadraticSurd exact = l2 * (QuadraticSurd::rational(1, lm.d()) - lm * lm);
    BigRational under = exact.lower_bound(BigInt(1000000));
    if (surd_cmp(exact, under) <= 0) throw InternalError("antiflip under-approximation is not below the cap");
    return {exact, under};
}

std::vector<WedgeParams> mutation_orbit(const WedgeParams& w, std::size_t n, bool unchecked) {
    bool infinite = false;
    if (!unchecked) {
        infinite = is_infinitely_right_mutable(w);
        if (!infinite)
            throw PreconditionError("orbit-not-certified",
                                    to_string(w) + " is not infinitely right-mutable; use the unchecked mode");
    }
    std::vector<WedgeParams> out{w};
    for (std::size_t k = 0; k < n; ++k) {
        try {
            out.push_back(mutate(out.back(), Side::Right));
        } catch (const NotMutable&) {
            if (infinite) throw InternalError("mutability lost along a certified orbit at step " + std::to_string(k + 1));
            throw;
        }
    }
    return out;
}

} // namespace atoric
