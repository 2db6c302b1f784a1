#include "atoric/workbench/session.hpp"

#include "atoric/errors.hpp"
#include "atoric/workbench/svg.hpp"

#include <fstream>

namespace atoric {

namespace {

void require_room(const BigRational& x, const char* which) {
    if (x <= 0)
        throw PreconditionError("no-room", std::string("the move would leave ") + which + " = " + rat(x) +
                                               " of the bounded subpolygon");
}

Json bounds_json(const SessionState& s) {
    if (!s.l1) return nullptr;
    return {{"l1", rat(*s.l1)}, {"l2", rat(*s.l2)}};
}

Json state_json(const SessionState& s) { return {{"wedge", to_json(s.wedge)}, {"bounds", bounds_json(s)}}; }

// Bookkeeping for one mutation: right mutation moves the old edge into the left
// bound and eats the new edge out of the right one; left mutation is the inverse.
void shift_bounds(SessionState& next, const SessionState& prev, Side side) {
    if (!prev.l1) return;
    if (side == Side::Right) {
        next.l1 = *prev.l1 + prev.wedge.a;
        next.l2 = *prev.l2 - next.wedge.a;
        require_room(*next.l2, "l2");
    } else {
        next.l1 = *prev.l1 - next.wedge.a;
        next.l2 = *prev.l2 + prev.wedge.a;
        require_room(*next.l1, "l1");
    }
}

} // namespace

Session::Session(std::string id, const Json& create) : id_(std::move(id)) {
    SessionState s;
    if (create.contains("wedge")) s.wedge = wedge_from_json(create.at("wedge"));
    else if (create.contains("chain")) s.wedge = from_chain(marked_chain_from_json(create.at("chain")), rational_field(create, "a"));
    else throw ValidationError("missing-field", "a session starts from \"wedge\" or \"chain\"");
    auto l1 = optional_rational(create, "l1"), l2 = optional_rational(create, "l2");
    if (l1.has_value() != l2.has_value()) throw ValidationError("bad-bounds", "give both l1 and l2 or neither");
    if (l1) {
        if (*l1 <= 0 || *l2 <= 0) throw ValidationError("nonpositive-length", "bounds must be positive");
        s.l1 = l1;
        s.l2 = l2;
    }
    s.action = "create";
    history_.push_back(std::move(s));
    Json ev = create;
    ev["op"] = "create";
    ev["id"] = id_;
    events_.push_back(std::move(ev));
}

void Session::push(SessionState s, Json event) {
    history_.resize(cursor_ + 1);
    history_.push_back(std::move(s));
    ++cursor_;
    events_.push_back(std::move(event));
}

Json Session::apply(const Json& event) {
    if (!event.is_object() || !event.contains("op") || !event.at("op").is_string())
        throw ValidationError("bad-event", "event needs an \"op\"");
    std::string op = event.at("op").get<std::string>();
    if (op == "mutate") {
        if (!event.contains("side") || !event.at("side").is_string())
            throw ValidationError("missing-field", "missing field side");
        return mutate(parse_side(event.at("side").get<std::string>()));
    }
    if (op == "antiflip") return antiflip(rational_field(event, "aMinus"));
    if (op == "flip") return flip(rational_field(event, "aPlus"));
    if (op == "undo") {
        undo();
        return view();
    }
    if (op == "redo") {
        redo();
        return view();
    }
    throw ValidationError("bad-event", "unknown op " + op);
}

Json Session::mutate(Side side) {
    const SessionState& cur = current();
    SessionState next{atoric::mutate(cur.wedge, side), {}, {}, std::string("mutate ") + to_string(side)};
    shift_bounds(next, cur, side);
    Json out = state_json(next);
    push(std::move(next), {{"op", "mutate"}, {"side", side == Side::Left ? "left" : "right"}});
    return out;
}

Json Session::antiflip(const BigRational& a_minus) {
    const SessionState& cur = current();
    SessionState next;
    Json out;
    if (cur.l1) {
        AntiflipInBounds r = antiflip_in_bounds(cur.wedge, *cur.l1, *cur.l2, a_minus);
        next = {r.result.minus, r.l1, r.l2, "antiflip"};
        out = to_json(r);
    } else {
        AntiflipResult r = initial_antiflip(cur.wedge, a_minus);
        next = {r.minus, {}, {}, "antiflip"};
        out = to_json(r);
    }
    push(std::move(next), {{"op", "antiflip"}, {"aMinus", rat(a_minus)}});
    return out;
}

Json Session::flip(const BigRational& a_plus) {
    const SessionState& cur = current();
    FlipResult r = atoric::flip(cur.wedge, a_plus);
    if (r.kind != FlipResult::Kind::FlipTo) {
        throw RefusedAction("divisorial-contraction", "the left descent ends borderline; there is no flipped wedge",
                            to_json(r));
    }
    SessionState prev = cur;
    for (std::size_t k = 1; k < r.descent.size(); ++k) {
        SessionState step{r.descent[k], {}, {}, ""};
        shift_bounds(step, prev, Side::Left);
        prev = std::move(step);
    }
    SessionState next{*r.plus, {}, {}, "flip"};
    if (prev.l1) {
        next.l1 = *prev.l1 - a_plus;
        next.l2 = *prev.l2 + prev.wedge.a;
        require_room(*next.l1, "l1");
    }
    push(std::move(next), {{"op", "flip"}, {"aPlus", rat(a_plus)}});
    return to_json(r);
}

void Session::undo() {
    if (cursor_ == 0) throw PreconditionError("nothing-to-undo", "already at the first state");
    --cursor_;
    events_.push_back({{"op", "undo"}});
}

void Session::redo() {
    if (cursor_ + 1 >= history_.size()) throw PreconditionError("nothing-to-redo", "already at the newest state");
    ++cursor_;
    events_.push_back({{"op", "redo"}});
}

Json Session::view() const {
    const SessionState& s = current();
    const WedgeParams& w = s.wedge;
    WedgeInvariants inv = invariants(w);
    Mutability left = classify(w, Side::Left), right = classify(w, Side::Right);
    Json j = {{"id", id_},
              {"cursor", cursor_},
              {"historyLength", history_.size()},
              {"lastAction", s.action},
              {"wedge", to_json(w)},
              {"invariants", to_json(inv)},
              {"boundaryChain", to_json(boundary_chain(w))},
              {"bounds", bounds_json(s)},
              {"classify", {{"left", to_json(left)}, {"right", to_json(right)}}}};
    j["actions"] = {{"mutateLeft", left.status == MutabilityStatus::Mutable},
                    {"mutateRight", right.status == MutabilityStatus::Mutable},
                    {"antiflip", inv.k == KSign::KPositive},
                    {"flip", inv.k == KSign::KNegative && w.c == 1},
                    {"undo", cursor_ > 0},
                    {"redo", cursor_ + 1 < history_.size()}};
    j["budget"] = nullptr;
    j["antiflipCap"] = nullptr;
    if (s.l2 && inv.k == KSign::KNegative && w.c == 1 && is_infinitely_right_mutable(w))
        j["budget"] = to_json(budget(w, *s.l2, 10));
    if (s.l2 && inv.k == KSign::KPositive && inv.sigma >= 2) j["antiflipCap"] = to_json(max_antiflip_param(*s.l2, inv.sigma));
    return j;
}

std::string Session::svg() const {
    const SessionState& s = current();
    return render_svg(s.l1 ? bounded(s.wedge, *s.l1, *s.l2) : realize(s.wedge));
}

Json Session::mori(std::size_t n) const {
    const WedgeParams& w = current().wedge;
    if (sigma(w) >= 0 || w.c != 1)
        throw PreconditionError("no-mori-sequence", "Mori sequences start from a K-negative wedge with c = 1");
    MoriSeed seed = seed_of(w);
    Json j = to_json(generate(seed, n));
    if (seed.delta >= 2) j["asymptotics"] = to_json(classify_asymptotics(seed));
    return j;
}

Session Session::replay(const std::vector<Json>& events) {
    if (events.empty() || events.front().value("op", "") != "create")
        throw ValidationError("bad-log", "a log starts with a create event");
    Json create = events.front();
    std::string id = create.value("id", "replayed");
    create.erase("op");
    create.erase("id");
    Session s(id, create);
    for (std::size_t i = 1; i < events.size(); ++i) s.apply(events[i]);
    return s;
}

Registry::Registry(std::optional<std::filesystem::path> log_dir) : log_dir_(std::move(log_dir)) {
    if (log_dir_) std::filesystem::create_directories(*log_dir_);
}

std::string Registry::create(const Json& body) {
    std::unique_lock lk(map_lock_);
    std::string id = "s" + std::to_string(next_);
    auto entry = std::make_shared<Entry>(Session(id, body));
    ++next_;
    sessions_.emplace(id, entry);
    lk.unlock();
    if (log_dir_) {
        std::ofstream out(*log_dir_ / (id + ".jsonl"), std::ios::trunc);
        out << entry->session.events().front().dump() << '\n';
    }
    return id;
}

std::shared_ptr<Registry::Entry> Registry::find(const std::string& id) const {
    std::shared_lock lk(map_lock_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

void Registry::persist(const Entry& entry) const {
    if (!log_dir_) return;
    std::ofstream out(*log_dir_ / (entry.session.id() + ".jsonl"), std::ios::app);
    out << entry.session.events().back().dump() << '\n';
}

std::vector<Json> Registry::read_log(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ValidationError("bad-log", "cannot read " + file.string());
    std::vector<Json> events;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) events.push_back(Json::parse(line));
    return events;
}

} // namespace atoric
