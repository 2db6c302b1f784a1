#include "atoric/hjchain.hpp"

#include "atoric/errors.hpp"

namespace atoric {

Chain blowup(const Chain& chain, std::size_t position) {
    if (position > chain.size())
        throw ValidationError("position-out-of-range", "blow-up position " + std::to_string(position) +
                                                           " outside [0," + std::to_string(chain.size()) + "]");
    Chain out = chain;
    if (position > 0) ++out[position - 1];
    if (position < chain.size()) ++out[position];
    out.insert(out.begin() + static_cast<long>(position), 1);
    return out;
}

Chain blowdown(const Chain& chain, std::size_t index) {
    if (index >= chain.size())
        throw ValidationError("position-out-of-range", "blow-down index " + std::to_string(index) + " out of range");
    if (chain[index] != 1)
        throw PreconditionError("not-minus-one", "entry " + std::to_string(index) + " of " + to_string(chain) +
                                                     " is not 1");
    Chain out = chain;
    out.erase(out.begin() + static_cast<long>(index));
    if (index > 0) --out[index - 1];
    if (index < out.size()) --out[index];
    return out;
}

Chain replay(const Chain& start, const MoveScript& script) {
    Chain cur = start;
    for (std::size_t i = 0; i < script.size(); ++i) {
        const Move& m = script[i];
        try {
            cur = m.kind == Move::Kind::BlowUp ? blowup(cur, m.at) : blowdown(cur, m.at);
        } catch (const Error& e) {
            throw PreconditionError("script-step", "step " + std::to_string(i + 1) + ": " + e.what());
        }
        if (m.expected && *m.expected != cur)
            throw PreconditionError("snapshot-mismatch", "step " + std::to_string(i + 1) + ": got " + to_string(cur) +
                                                             ", expected " + to_string(*m.expected));
    }
    return cur;
}

std::vector<WahlSplit> find_wahl_splits(const Chain& chain) {
    std::vector<WahlSplit> out;
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
        Chain left(chain.begin(), chain.begin() + static_cast<long>(i));
        Chain right(chain.begin() + static_cast<long>(i) + 1, chain.end());
        auto l = recognize_wahl(left);
        auto r = recognize_wahl(right);
        if (l && r) out.push_back({MarkedChain{left, chain[i], right}, *l, *r});
    }
    return out;
}

K1AReport k1a_parallelism(const WedgeParams& w) {
    K1AReport rep{cut_direction(w, CutSide::B1), {1, 0}, {}, {}};
    LatticeVector v1 = ray_direction(w, Side::Right);
    LatticeVector v2{-1, 0};
    rep.vertex = vertex_type(v1, v2);
    if (rep.vertex.P == 1) return rep;
    rep.edges = resolve_corner(v1, v2);
    for (std::size_t i = 0; i < rep.edges.size(); ++i) {
        if (parallel(rep.edges[i].direction, rep.cut)) {
            rep.match = ParallelEdge{i, rep.edges[i].direction, rep.edges[i].self_intersection};
            break;
        }
    }
    return rep;
}

} // namespace atoric
