#pragma once

#include "swarmcheck/model.hpp"

#include <stdexcept>
#include <vector>

namespace swarmcheck {

// Mover annotation convention: step.mover is the robot that moves *out of*
// step.state. The final prefix step moves into loop.front(); the final loop
// step closes the loop. A finite (safety) witness has an empty loop and a
// trailing step with mover kNoMover.
inline constexpr int kNoMover = -2;

template <typename StateT>
struct TraceStep {
    StateT state;
    int mover = kNoMover;
};

template <typename StateT>
struct Lasso {
    std::vector<TraceStep<StateT>> prefix;
    std::vector<TraceStep<StateT>> loop;
};

using GlobalTrace = std::vector<TraceStep<SwarmState>>;
using RelativeTrace = std::vector<TraceStep<RelativeState>>;
using GlobalLasso = Lasso<SwarmState>;
using RelativeLasso = Lasso<RelativeState>;

struct TraceReplayError : std::runtime_error {
    TraceReplayError(int step, const std::string &what)
        : std::runtime_error(what), step_index(step) {}

    int step_index;
};

} // namespace swarmcheck
