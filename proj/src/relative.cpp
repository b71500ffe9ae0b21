#include "swarmcheck/relative.hpp"

#include <algorithm>
#include <cassert>

namespace swarmcheck {

SwarmState transform_state(const FrameTransform &t, const SwarmState &s, int m, int r) {
    SwarmState out = s;
    for (int i = 0; i < r; ++i)
        out.robots[static_cast<std::size_t>(i)].pose =
            apply_transform(t, s.robots[static_cast<std::size_t>(i)].pose, m);
    return out;
}

RelativeState canonicalize(const SwarmState &s, int m, int r) {
    FrameTransform t = transform_fixing(s.robots[0].pose, m);
    RelativeState rel{transform_state(t, s, m, r)};
    assert(rel.base.robots[0].pose == kOriginNorth);
    return rel;
}

SwarmState lift(const RelativeState &rel, const Pose &ref_pose, int m, int r) {
    assert(rel.base.robots[0].pose == kOriginNorth);
    return transform_state(transform_placing(ref_pose, m), rel.base, m, r);
}

std::vector<SwarmState> orbit(const SwarmState &s, int m, int r) {
    std::vector<SwarmState> out;
    out.reserve(static_cast<std::size_t>(4 * m * m));
    for (int rot = 0; rot < 4; ++rot)
        for (int dx = 0; dx < m; ++dx)
            for (int dy = 0; dy < m; ++dy)
                out.push_back(transform_state({rot, dx, dy}, s, m, r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Reference branches reach the rest of the swarm as the inverse frame
// motion: the transform that pins the reference's new pose back to the
// origin. A forward move becomes the southward shift, a turn the matching
// table row, and the counting abstraction's turn-then-move branches compose
// both.
void append_reference_branch(const RelativeState &rel, const RobotState &branch,
                             std::uint8_t next_turn, std::uint8_t next_remaining,
                             const ModelParams &params, std::vector<RelSuccessor> &out) {
    FrameTransform t = transform_fixing(branch.pose, params.m);
    RelativeState succ = rel;
    for (int j = 1; j < params.r; ++j)
        succ.base.robots[static_cast<std::size_t>(j)].pose =
            apply_transform(t, rel.base.robots[static_cast<std::size_t>(j)].pose, params.m);
    succ.base.robots[0] = branch;
    succ.base.robots[0].pose = kOriginNorth;
    succ.base.turn = next_turn;
    succ.base.remaining = next_remaining;
    out.push_back({succ, 0});
}

void append_sync_relative(const RelativeState &rel, const ModelParams &params,
                          std::vector<RelSuccessor> &out) {
    std::vector<std::vector<RobotState>> choices;
    choices.reserve(static_cast<std::size_t>(params.r));
    for (int i = 0; i < params.r; ++i)
        choices.push_back(robot_decision(rel.base, i, params));
    std::vector<std::size_t> pick(static_cast<std::size_t>(params.r), 0);
    for (;;) {
        SwarmState staged = rel.base;
        for (int i = 0; i < params.r; ++i)
            staged.robots[static_cast<std::size_t>(i)] =
                choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        out.push_back({canonicalize(staged, params.m, params.r), kAllRobots});
        int pos = params.r - 1;
        while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] ==
                               choices[static_cast<std::size_t>(pos)].size()) {
            pick[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
}

} // namespace

void relative_successors(const RelativeState &rel, const ModelParams &params,
                         std::vector<RelSuccessor> &out) {
    assert(rel.base.robots[0].pose == kOriginNorth);
    out.clear();
    if (params.mode == Mode::sync) {
        append_sync_relative(rel, params, out);
    } else {
        for (const SchedStep &step : schedule(rel.base, params)) {
            for (const RobotState &branch : robot_decision(rel.base, step.mover, params)) {
                if (step.mover == 0) {
                    append_reference_branch(rel, branch, step.next_turn, step.next_remaining,
                                            params, out);
                } else {
                    RelSuccessor succ{rel, step.mover};
                    succ.state.base.robots[static_cast<std::size_t>(step.mover)] = branch;
                    succ.state.base.turn = step.next_turn;
                    succ.state.base.remaining = step.next_remaining;
                    out.push_back(std::move(succ));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::vector<RelSuccessor> relative_successors(const RelativeState &rel, const ModelParams &params) {
    std::vector<RelSuccessor> out;
    relative_successors(rel, params, out);
    return out;
}

void for_each_initial_relative(const ModelParams &params,
                               const std::function<void(const RelativeState &)> &fn) {
    if (params.init.kind == InitialConstraint::Kind::explicit_list) {
        bool any = false;
        for (const SwarmState &given : params.init.states) {
            SwarmState s = given;
            s.turn = 0;
            s.remaining = params.mode == Mode::nonstrict
                              ? static_cast<std::uint8_t>((1u << params.r) - 1)
                              : 0;
            fn(canonicalize(s, params.m, params.r));
            any = true;
        }
        if (!any)
            throw ConfigError("empty initial state set");
        return;
    }

    // Enumerate representatives directly: the reference pinned to the origin,
    // every other robot over all poses. This is exactly the image of the
    // global initial set under canonicalize, once per orbit.
    bool connected_only = params.init.kind == InitialConstraint::Kind::connected;
    bool counting = params.abstraction == Abstraction::counting;
    int cells = params.m * params.m;
    bool any = false;

    RelativeState rel;
    rel.base.robots[0].pose = kOriginNorth;
    rel.base.turn = 0;
    rel.base.remaining = params.mode == Mode::nonstrict
                             ? static_cast<std::uint8_t>((1u << params.r) - 1)
                             : 0;

    std::vector<int> cell(static_cast<std::size_t>(params.r), 0);
    std::vector<int> dir(static_cast<std::size_t>(params.r), 0);
    for (;;) {
        bool ok = true;
        for (int i = 1; i < params.r && ok; ++i) {
            int c = cell[static_cast<std::size_t>(i)];
            rel.base.robots[static_cast<std::size_t>(i)].pose =
                Pose{c % params.m, c / params.m, static_cast<Dir>(dir[static_cast<std::size_t>(i)])};
            if (counting)
                for (int j = 0; j < i; ++j)
                    if (cell[static_cast<std::size_t>(j)] == c)
                        ok = false;
        }
        if (ok) {
            for (int i = 0; i < params.r; ++i) {
                RobotState &rob = rel.base.robots[static_cast<std::size_t>(i)];
                rob.motion = 0;
                rob.last_num_con = counting ? static_cast<std::uint8_t>(
                                                  neighbor_count(rel.base, i, params))
                                            : 0;
            }
            if (!connected_only || all_connected(rel.base, params)) {
                fn(rel);
                any = true;
            }
        }
        int pos = params.r - 1;
        for (;;) {
            if (pos < 1) {
                pos = 0;
                break;
            }
            if (++dir[static_cast<std::size_t>(pos)] < 4)
                break;
            dir[static_cast<std::size_t>(pos)] = 0;
            if (++cell[static_cast<std::size_t>(pos)] < cells)
                break;
            cell[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos == 0)
            break;
    }
    if (!any)
        throw ConfigError("empty initial state set");
}

bool is_initial_state(const RelativeState &s, const ModelParams &params) {
    if (s.base.robots[0].pose != kOriginNorth)
        return false;
    if (params.init.kind == InitialConstraint::Kind::explicit_list) {
        if (s.base.turn != 0)
            return false;
        std::uint8_t want_remaining = params.mode == Mode::nonstrict
                                          ? static_cast<std::uint8_t>((1u << params.r) - 1)
                                          : 0;
        if (s.base.remaining != want_remaining)
            return false;
        for (const SwarmState &given : params.init.states) {
            SwarmState seeded = given;
            seeded.turn = 0;
            seeded.remaining = want_remaining;
            if (canonicalize(seeded, params.m, params.r) == s)
                return true;
        }
        return false;
    }
    // The default constraints are frame-invariant, so the representative is
    // initial exactly when it is initial as a global state.
    return is_initial_state(s.base, params);
}

GlobalTrace lift_trace(const RelativeTrace &trace, const Pose &ref_pose0,
                       const ModelParams &params) {
    GlobalTrace out;
    if (trace.empty())
        return out;
    out.reserve(trace.size());
    out.push_back({lift(trace[0].state, ref_pose0, params.m, params.r), trace[0].mover});

    std::vector<Successor> succs;
    for (std::size_t t = 0; t + 1 < trace.size(); ++t) {
        const SwarmState &g = out[t].state;
        int mover = trace[t].mover;
        global_successors(g, params, succs);
        const SwarmState *match = nullptr;
        for (const Successor &cand : succs) {
            if (cand.mover != mover)
                continue;
            if (canonicalize(cand.state, params.m, params.r) == trace[t + 1].state) {
                match = &cand.state;
                break;
            }
        }
        if (match == nullptr)
            throw TraceReplayError(static_cast<int>(t),
                                   "no global transition matches relative step " + std::to_string(t));
        out.push_back({*match, trace[t + 1].mover});
    }
    return out;
}

} // namespace swarmcheck
