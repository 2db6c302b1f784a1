#pragma once

#include "atoric/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atoric {

// Hirzebruch-Jung chain [b1,...,br]. Canonical when every entry >= 2.
using Chain = std::vector<std::int64_t>;

struct MarkedChain {
    Chain left;
    std::int64_t c = 0;
    Chain right;

    Chain concatenated() const;
    friend bool operator==(const MarkedChain&, const MarkedChain&) = default;
};

struct WahlPair {
    BigInt p, q;
    friend bool operator==(const WahlPair&, const WahlPair&) = default;
};

bool is_canonical(const Chain& chain);

// b1 - 1/(b2 - 1/(... - 1/br)), evaluated projectively from the right.
ExtRational cf_eval(const Chain& chain);
// True when no proper suffix of the chain evaluates to zero, i.e. the nested
// fraction never divides by zero on the way in.
bool cf_well_defined(const Chain& chain);
Chain cf_expand(const BigRational& x);

Chain wahl_chain(const BigInt& p, const BigInt& q);
std::optional<WahlPair> recognize_wahl(const Chain& chain);

std::string to_string(const Chain& chain);       // "[2,5,3]"
std::string to_string(const MarkedChain& chain); // "[2,5,3]-1-[2,3,2,2,7,3]"
Chain parse_chain(std::string_view text);        // "[2,5,3]", "2,5,3", "[]"
MarkedChain parse_marked_chain(std::string_view text);

} // namespace atoric
