#pragma once

#include "atoric/workbench/json_io.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace atoric {

// A refused action whose explanation is structured data.
class RefusedAction : public PreconditionError {
public:
    RefusedAction(std::string code, const std::string& message, Json detail)
        : PreconditionError(std::move(code), message), detail_(std::move(detail)) {}
    const Json& detail() const { return detail_; }

private:
    Json detail_;
};

struct SessionState {
    WedgeParams wedge;
    std::optional<BigRational> l1, l2; // bounded subpolygon, when tracked
    std::string action;               // what produced this state
    friend bool operator==(const SessionState&, const SessionState&) = default;
};

// Undo/redo history plus an append-only event log that replays to the same state.
// Not synchronized; Registry hands out sessions together with their lock.
class Session {
public:
    // {"wedge": ..} or {"chain": .., "a": ..}, optional "l1"/"l2".
    Session(std::string id, const Json& create);

    const std::string& id() const { return id_; }
    const SessionState& current() const { return history_[cursor_]; }
    std::size_t cursor() const { return cursor_; }
    std::size_t history_size() const { return history_.size(); }
    const std::vector<Json>& events() const { return events_; }

    // Each returns the action's own result; state changes only on success.
    Json apply(const Json& event); // {"op": "mutate"|"antiflip"|"flip"|"undo"|"redo", ...}
    Json mutate(Side side);
    Json antiflip(const BigRational& a_minus);
    Json flip(const BigRational& a_plus);
    void undo();
    void redo();

    Json view() const;
    std::string svg() const;
    Json mori(std::size_t n) const;

    static Session replay(const std::vector<Json>& events);

private:
    void push(SessionState s, Json event);

    std::string id_;
    std::vector<SessionState> history_;
    std::size_t cursor_ = 0;
    std::vector<Json> events_;
};

// Sessions keyed by id. The map takes a shared lock for lookups; each session
// carries its own reader/writer lock so one writer at a time mutates it.
class Registry {
public:
    explicit Registry(std::optional<std::filesystem::path> log_dir = std::nullopt);

    std::string create(const Json& body);

    struct Entry {
        Session session;
        mutable std::shared_mutex lock;
        explicit Entry(Session s) : session(std::move(s)) {}
    };
    std::shared_ptr<Entry> find(const std::string& id) const; // nullptr when unknown

    // Appends the newest event of `entry` to its log file, if logging is on.
    void persist(const Entry& entry) const;

    static std::vector<Json> read_log(const std::filesystem::path& file);

private:
    std::optional<std::filesystem::path> log_dir_;
    mutable std::shared_mutex map_lock_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::size_t next_ = 1;
};

} // namespace atoric
