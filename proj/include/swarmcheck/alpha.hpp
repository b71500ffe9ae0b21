#pragma once

#include "swarmcheck/model.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace swarmcheck {

// Number of robots j != i within communication range of robot i.
int neighbor_count(const SwarmState &s, int i, const ModelParams &params);

// True iff the communication graph over all r robots has one component.
bool all_connected(const SwarmState &s, const ModelParams &params);

// True iff no two robots occupy the same cell.
bool collision_free(const SwarmState &s, const ModelParams &params);

bool pairwise_connected(const SwarmState &s, int i, int j, const ModelParams &params);

// One possible outcome of robot i taking its step: the robot's new
// variables. Other robots' variables never change in one branch.
std::vector<RobotState> robot_decision_legacy(const SwarmState &s, int i, const ModelParams &params);
std::vector<RobotState> robot_decision_counting(const SwarmState &s, int i, const ModelParams &params);
std::vector<RobotState> robot_decision(const SwarmState &s, int i, const ModelParams &params);

struct SchedStep {
    int mover = 0; // kAllRobots in sync mode
    std::uint8_t next_turn = 0;
    std::uint8_t next_remaining = 0;
};

// The scheduler's choices in state s: which robot moves and the scheduler
// variables after the move.
std::vector<SchedStep> schedule(const SwarmState &s, const ModelParams &params);

struct Successor {
    SwarmState state;
    int mover = 0;

    friend auto operator<=>(const Successor &, const Successor &) = default;
};

// All successor states with their movers, sorted and duplicate-free.
void global_successors(const SwarmState &s, const ModelParams &params, std::vector<Successor> &out);
std::vector<Successor> global_successors(const SwarmState &s, const ModelParams &params);

// Enumerates the initial set induced by params.init in a fixed order.
// Throws ConfigError if the set is empty.
void for_each_initial(const ModelParams &params, const std::function<void(const SwarmState &)> &fn);
std::vector<SwarmState> initial_states(const ModelParams &params);

// Membership test equivalent to appearing in for_each_initial's output.
bool is_initial_state(const SwarmState &s, const ModelParams &params);

struct DomainVar {
    std::string name;
    std::uint64_t size = 1;
};

// The domain-size ledger behind the total-state-space formulas: one variable
// list per robot (index 0 is the reference in the relative encoding) plus
// the global variables for the concurrency mode and encoding.
struct VariableSignature {
    std::vector<std::vector<DomainVar>> robot_vars;
    std::vector<DomainVar> global_vars;
};

VariableSignature signature(const ModelParams &params);

// Exact product of every domain size. Throws ConfigError on uint64 overflow.
std::uint64_t state_space_size(const VariableSignature &sig);

} // namespace swarmcheck
