#pragma once

#include "atoric/surd.hpp"
#include "atoric/wedge.hpp"

#include <optional>
#include <vector>

namespace atoric {

struct MoriSeed {
    BigInt p1, q1, p2, q2, delta;
    friend bool operator==(const MoriSeed&, const MoriSeed&) = default;
};

struct MoriPair {
    BigInt p, q;
    friend bool operator==(const MoriPair&, const MoriPair&) = default;
};

enum class Asymptotics { IncreasingToLambdaPlus, DecreasingTerminating, BetweenEigenrays };
const char* to_string(Asymptotics a);

struct MoriSequence {
    MoriSeed seed;
    std::vector<MoriPair> pairs; // stored with the left convention, (1,0) for p = 1
    Asymptotics classification;
    bool terminated = false; // a term left the positive quadrant before n pairs

    // Pairs with the printed convention: a smooth first term shows as (1,1).
    std::vector<MoriPair> display_pairs() const;
};

MoriSeed validate_seed(const BigInt& p1, const BigInt& q1, const BigInt& p2, const BigInt& q2);
MoriSeed seed_of(const WedgeParams& w);
BigInt seed_Delta(const MoriSeed& s); // p1^2 + p2^2 - delta p1 p2

MoriSequence generate(const MoriSeed& seed, std::size_t n);

struct AsymptoticReport {
    Asymptotics region;
    std::optional<QuadraticSurd> lambda_minus, lambda_plus; // delta >= 2
    std::vector<BigRational> ratios;                        // p_{i+1}/p_i when increasing
};
AsymptoticReport classify_asymptotics(const MoriSeed& seed, std::size_t ratio_terms = 10);

bool is_infinitely_right_mutable(const WedgeParams& w);

struct Budget {
    enum class Verdict { FitsForever, FitsUpTo, Exceeds, ExceedsAtInfinity, UnboundedRoomRequired };
    BigRational a_minus;
    BigRational l2;
    BigInt delta;
    std::vector<BigRational> consumed;     // a_1, a_2, ...
    std::vector<BigRational> partial_sums; // S_k = a_1 + ... + a_k
    std::optional<QuadraticSurd> bound;    // a^- / (lambda_+^2 - 1); absent for delta = 2
    Verdict verdict;
    std::size_t fits = 0;                  // mutations that fit among the n computed
    std::optional<std::size_t> overflow_step; // first k with S_k >= l2
};
const char* to_string(Budget::Verdict v);

Budget budget(const WedgeParams& w, const BigRational& l2, std::size_t n);

struct AntiflipCap {
    QuadraticSurd exact;     // l2 (1 - lambda_-^2), a supremum
    BigRational under;       // rational strictly below it (or 0 when it is 0)
};
AntiflipCap max_antiflip_param(const BigRational& l2, const BigInt& delta);

// Iterated right mutation. Checked mode requires every step to be mutable and
// treats a failure on an infinitely mutable wedge as an internal inconsistency.
std::vector<WedgeParams> mutation_orbit(const WedgeParams& w, std::size_t n, bool unchecked = false);

} // namespace atoric
