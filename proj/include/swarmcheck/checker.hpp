#pragma once

#include "swarmcheck/model.hpp"
#include "swarmcheck/trace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace swarmcheck {

enum class TemporalShape : std::uint8_t { eventually, always, repeatedly, eventually_always };

enum class Atom : std::uint8_t { all_connected, collision_free, pairwise };

struct Property {
    TemporalShape shape = TemporalShape::eventually;
    Atom atom = Atom::all_connected;
    bool negated = false;
    int i = 0, j = 0; // pairwise operands

    friend bool operator==(const Property &, const Property &) = default;
};

struct PropertyParseError : std::runtime_error {
    PropertyParseError(std::size_t pos, const std::string &what)
        : std::runtime_error(what), position(pos) {}

    std::size_t position;
};

// Grammar: ("F" | "G" | "GF" | "FG") atom, atom := ["!"] ident | ["!"] "pairwise(" i "," j ")".
Property parse_property(std::string_view text);
std::string to_string(const Property &prop);

bool eval_atom(const Property &prop, const SwarmState &s, const ModelParams &params);

struct Budget {
    std::uint64_t max_states = 20'000'000;
    double max_seconds = 0; // 0 = unlimited
};

enum class Outcome : std::uint8_t { holds, fails, inconclusive };

const char *to_string(Outcome o);

struct CheckStats {
    std::uint64_t reachable = 0;
    std::uint64_t transitions = 0;
    std::uint64_t peak_states = 0;
    std::int64_t time_ms = 0;
    bool budget_hit = false;
};

struct Verdict {
    Outcome outcome = Outcome::inconclusive;
    std::optional<GlobalLasso> witness;
    std::optional<RelativeLasso> rel_witness;
    CheckStats stats;
};

struct ReachResult {
    std::uint64_t count = 0;
    std::uint64_t transitions = 0;
    bool budget_hit = false;
    std::int64_t time_ms = 0;
};

// Breadth-first enumeration of the reachable states under the configured
// encoding. Stops cleanly when the stored-state budget is exceeded.
ReachResult enumerate_reachable(const ModelParams &params, const Budget &budget = {});

// Materialized reachable set (packed keys in BFS order) for small instances.
std::vector<std::uint64_t> reachable_keys(const ModelParams &params, const Budget &budget = {});

// Checks prop over every fair execution from every initial state.
Verdict check(const ModelParams &params, const Property &prop, const Budget &budget = {});

struct TraceCheck {
    bool ok = true;
    int failing_step = -1; // position in prefix+loop order
    std::string reason;
};

// Independent witness replay: re-derives each transition from the successor
// function, checks loop closure, the shape-specific predicate obligations,
// initial-state membership, and fair-mode mover coverage.
TraceCheck validate_trace(const GlobalLasso &trace, const ModelParams &params, const Property &prop);
TraceCheck validate_trace(const RelativeLasso &trace, const ModelParams &params, const Property &prop);

enum class Agreement : std::uint8_t { identical, different, untested };

struct AgreementReport {
    Agreement agreement = Agreement::untested;
    Verdict global;
    Verdict relative;
};

// Runs prop under both encodings of the same abstraction and compares.
AgreementReport verdict_agreement(const ModelParams &params, const Property &prop,
                                  const Budget &budget = {});

} // namespace swarmcheck
