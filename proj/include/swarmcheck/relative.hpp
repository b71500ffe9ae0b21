#pragma once

#include "swarmcheck/alpha.hpp"
#include "swarmcheck/model.hpp"
#include "swarmcheck/trace.hpp"

#include <vector>

namespace swarmcheck {

// Applies t to the first r robot poses; non-pose and scheduler variables are
// copied, unused trailing array entries stay in their canonical zero state.
SwarmState transform_state(const FrameTransform &t, const SwarmState &s, int m, int r);

// The canonical representative of s: the unique frame transform that pins
// robot 0 to ((0, 0), n), applied to every robot.
RelativeState canonicalize(const SwarmState &s, int m, int r);

// Inverse of canonicalize at a chosen reference pose.
SwarmState lift(const RelativeState &rel, const Pose &ref_pose, int m, int r);

// The 4*m^2 images of s under all frame transforms, sorted, duplicate-free.
std::vector<SwarmState> orbit(const SwarmState &s, int m, int r);

struct RelSuccessor {
    RelativeState state;
    int mover = 0;

    friend auto operator<=>(const RelSuccessor &, const RelSuccessor &) = default;
};

// Successors computed directly in the reference frame. A non-reference robot
// steps as in the global model; a reference move shifts every other robot the
// opposite way, and a reference turn reframes every other robot with the
// matching table row. Agrees with canonicalized global successors.
void relative_successors(const RelativeState &rel, const ModelParams &params,
                         std::vector<RelSuccessor> &out);
std::vector<RelSuccessor> relative_successors(const RelativeState &rel, const ModelParams &params);

void for_each_initial_relative(const ModelParams &params,
                               const std::function<void(const RelativeState &)> &fn);

bool is_initial_state(const RelativeState &s, const ModelParams &params);

// Replays a relative trace as a global trace, integrating the reference
// robot's virtual motion from ref_pose0 onward. Every output step is a valid
// global transition and canonicalizes back to the input.
// Throws TraceReplayError if some step has no matching global transition.
GlobalTrace lift_trace(const RelativeTrace &trace, const Pose &ref_pose0, const ModelParams &params);

} // namespace swarmcheck
