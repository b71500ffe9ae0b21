#include "swarmcheck/alpha.hpp"

#include <algorithm>
#include <cassert>

namespace swarmcheck {

int neighbor_count(const SwarmState &s, int i, const ModelParams &params) {
    int k = 0;
    for (int j = 0; j < params.r; ++j) {
        if (j == i)
            continue;
        if (within_range(s.robots[static_cast<std::size_t>(i)].pose,
                         s.robots[static_cast<std::size_t>(j)].pose, params))
            ++k;
    }
    return k;
}

bool all_connected(const SwarmState &s, const ModelParams &params) {
    if (params.r <= 1)
        return true;
    // Flood from robot 0 across in-range edges.
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (int i = 0; i < params.r; ++i) {
            if (!(frontier & (1u << i)))
                continue;
            for (int j = 0; j < params.r; ++j) {
                if (seen & (1u << j))
                    continue;
                if (within_range(s.robots[static_cast<std::size_t>(i)].pose,
                                 s.robots[static_cast<std::size_t>(j)].pose, params))
                    next |= 1u << j;
            }
        }
        seen |= next;
        frontier = next;
    }
    return seen == (1u << params.r) - 1;
}

bool collision_free(const SwarmState &s, const ModelParams &params) {
    for (int i = 0; i < params.r; ++i)
        for (int j = i + 1; j < params.r; ++j) {
            const Pose &a = s.robots[static_cast<std::size_t>(i)].pose;
            const Pose &b = s.robots[static_cast<std::size_t>(j)].pose;
            if (a.x == b.x && a.y == b.y)
                return false;
        }
    return true;
}

bool pairwise_connected(const SwarmState &s, int i, int j, const ModelParams &params) {
    return within_range(s.robots[static_cast<std::size_t>(i)].pose,
                        s.robots[static_cast<std::size_t>(j)].pose, params);
}

std::vector<RobotState> robot_decision_legacy(const SwarmState &s, int i, const ModelParams &params) {
    const RobotState &rob = s.robots[static_cast<std::size_t>(i)];
    int k = neighbor_count(s, i, params);
    std::vector<RobotState> branches;
    if (rob.motion == kMotionForward && k < params.alpha) {
        // Lost connectivity: recovery turn, the turn consumes the step.
        RobotState b = rob;
        b.pose.dir = rotate_dir(rob.pose.dir, Turn::back);
        b.motion = kMotionSearching;
        branches.push_back(b);
    } else if (rob.motion == kMotionSearching && k >= params.alpha) {
        // Regained connectivity: random quarter turn.
        for (Turn t : {Turn::left, Turn::right}) {
            RobotState b = rob;
            b.pose.dir = rotate_dir(rob.pose.dir, t);
            b.motion = kMotionForward;
            branches.push_back(b);
        }
    } else {
        RobotState b = rob;
        b.pose = step_cell(rob.pose, params.m);
        branches.push_back(b);
    }
    return branches;
}

std::vector<RobotState> robot_decision_counting(const SwarmState &s, int i, const ModelParams &params) {
    const RobotState &rob = s.robots[static_cast<std::size_t>(i)];
    int k = neighbor_count(s, i, params);
    int prev = rob.last_num_con;

    // Phase 1: reorient on connectivity events.
    std::vector<Dir> headings;
    if (k < prev && k < params.alpha) {
        headings.push_back(rotate_dir(rob.pose.dir, Turn::back));
    } else if (k > prev) {
        headings.push_back(rotate_dir(rob.pose.dir, Turn::left));
        headings.push_back(rotate_dir(rob.pose.dir, Turn::right));
        headings.push_back(rotate_dir(rob.pose.dir, Turn::back));
    } else {
        headings.push_back(rob.pose.dir);
    }

    auto occupied = [&](const Pose &cell) {
        for (int j = 0; j < params.r; ++j) {
            if (j == i)
                continue;
            const Pose &p = s.robots[static_cast<std::size_t>(j)].pose;
            if (p.x == cell.x && p.y == cell.y)
                return true;
        }
        return false;
    };

    // Phase 2: move forward, or stay and turn away when the cell is taken.
    std::vector<RobotState> branches;
    for (Dir d : headings) {
        Pose oriented{rob.pose.x, rob.pose.y, d};
        Pose target = step_cell(oriented, params.m);
        if (!occupied(target)) {
            RobotState b = rob;
            b.pose = target;
            b.last_num_con = static_cast<std::uint8_t>(k);
            branches.push_back(b);
        } else {
            for (Turn t : {Turn::left, Turn::right}) {
                RobotState b = rob;
                b.pose = Pose{rob.pose.x, rob.pose.y, rotate_dir(d, t)};
                b.last_num_con = static_cast<std::uint8_t>(k);
                branches.push_back(b);
            }
        }
    }
    std::sort(branches.begin(), branches.end());
    branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
    return branches;
}

std::vector<RobotState> robot_decision(const SwarmState &s, int i, const ModelParams &params) {
    return params.abstraction == Abstraction::legacy ? robot_decision_legacy(s, i, params)
                                                     : robot_decision_counting(s, i, params);
}

std::vector<SchedStep> schedule(const SwarmState &s, const ModelParams &params) {
    std::vector<SchedStep> steps;
    switch (params.mode) {
    case Mode::strict:
        steps.push_back({s.turn, static_cast<std::uint8_t>((s.turn + 1) % params.r), 0});
        break;
    case Mode::nonstrict: {
        std::uint8_t full = static_cast<std::uint8_t>((1u << params.r) - 1);
        assert(s.remaining != 0);
        for (int i = 0; i < params.r; ++i) {
            if (!(s.remaining & (1u << i)))
                continue;
            std::uint8_t rest = static_cast<std::uint8_t>(s.remaining & ~(1u << i));
            steps.push_back({i, 0, rest == 0 ? full : rest});
        }
        break;
    }
    case Mode::fair:
        for (int i = 0; i < params.r; ++i)
            steps.push_back({i, 0, 0});
        break;
    case Mode::sync:
        steps.push_back({kAllRobots, 0, 0});
        break;
    }
    return steps;
}

namespace {

void append_sync_successors(const SwarmState &s, const ModelParams &params,
                            std::vector<Successor> &out) {
    // Every robot's branch set is computed against the current state, then
    // one branch per robot is applied simultaneously.
    std::vector<std::vector<RobotState>> choices;
    choices.reserve(static_cast<std::size_t>(params.r));
    for (int i = 0; i < params.r; ++i)
        choices.push_back(robot_decision(s, i, params));
    std::vector<std::size_t> pick(static_cast<std::size_t>(params.r), 0);
    for (;;) {
        SwarmState succ = s;
        for (int i = 0; i < params.r; ++i)
            succ.robots[static_cast<std::size_t>(i)] =
                choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        out.push_back({succ, kAllRobots});
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

void global_successors(const SwarmState &s, const ModelParams &params, std::vector<Successor> &out) {
    out.clear();
    if (params.mode == Mode::sync) {
        append_sync_successors(s, params, out);
    } else {
        for (const SchedStep &step : schedule(s, params)) {
            for (const RobotState &branch : robot_decision(s, step.mover, params)) {
                SwarmState succ = s;
                succ.robots[static_cast<std::size_t>(step.mover)] = branch;
                succ.turn = step.next_turn;
                succ.remaining = step.next_remaining;
                out.push_back({succ, step.mover});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::vector<Successor> global_successors(const SwarmState &s, const ModelParams &params) {
    std::vector<Successor> out;
    global_successors(s, params, out);
    return out;
}

namespace {

void seed_scheduler(SwarmState &s, const ModelParams &params) {
    s.turn = 0;
    s.remaining = params.mode == Mode::nonstrict
                      ? static_cast<std::uint8_t>((1u << params.r) - 1)
                      : 0;
}

// Fill per-robot derived variables that the initial constraint pins: legacy
// robots start in forward motion, counting robots remember their current
// neighbour count.
void seed_robot_vars(SwarmState &s, const ModelParams &params) {
    for (int i = 0; i < params.r; ++i) {
        RobotState &rob = s.robots[static_cast<std::size_t>(i)];
        rob.motion = 0;
        rob.last_num_con = 0;
    }
    if (params.abstraction == Abstraction::counting)
        for (int i = 0; i < params.r; ++i)
            s.robots[static_cast<std::size_t>(i)].last_num_con =
                static_cast<std::uint8_t>(neighbor_count(s, i, params));
}

} // namespace

void for_each_initial(const ModelParams &params, const std::function<void(const SwarmState &)> &fn) {
    bool any = false;
    auto emit = [&](const SwarmState &s) {
        any = true;
        fn(s);
    };

    if (params.init.kind == InitialConstraint::Kind::explicit_list) {
        for (const SwarmState &given : params.init.states) {
            SwarmState s = given;
            seed_scheduler(s, params);
            emit(s);
        }
        if (!any)
            throw ConfigError("empty initial state set");
        return;
    }

    bool connected_only = params.init.kind == InitialConstraint::Kind::connected;
    int cells = params.m * params.m;
    SwarmState s;
    seed_scheduler(s, params);

    // Odometer over every robot's (cell, dir) pair.
    std::vector<int> cell(static_cast<std::size_t>(params.r), 0);
    std::vector<int> dir(static_cast<std::size_t>(params.r), 0);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < params.r && ok; ++i) {
            int c = cell[static_cast<std::size_t>(i)];
            s.robots[static_cast<std::size_t>(i)].pose =
                Pose{c % params.m, c / params.m, static_cast<Dir>(dir[static_cast<std::size_t>(i)])};
            if (params.abstraction == Abstraction::counting)
                for (int j = 0; j < i; ++j)
                    if (cell[static_cast<std::size_t>(j)] == c)
                        ok = false;
        }
        if (ok) {
            seed_robot_vars(s, params);
            if (!connected_only || all_connected(s, params))
                emit(s);
        }
        int pos = params.r - 1;
        for (;;) {
            if (pos < 0)
                break;
            if (++dir[static_cast<std::size_t>(pos)] < 4)
                break;
            dir[static_cast<std::size_t>(pos)] = 0;
            if (++cell[static_cast<std::size_t>(pos)] < cells)
                break;
            cell[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
    if (!any)
        throw ConfigError("empty initial state set");
}

std::vector<SwarmState> initial_states(const ModelParams &params) {
    std::vector<SwarmState> out;
    for_each_initial(params, [&](const SwarmState &s) { out.push_back(s); });
    return out;
}

bool is_initial_state(const SwarmState &s, const ModelParams &params) {
    if (s.turn != 0)
        return false;
    std::uint8_t want_remaining = params.mode == Mode::nonstrict
                                      ? static_cast<std::uint8_t>((1u << params.r) - 1)
                                      : 0;
    if (s.remaining != want_remaining)
        return false;
    if (params.init.kind == InitialConstraint::Kind::explicit_list) {
        for (const SwarmState &given : params.init.states) {
            SwarmState seeded = given;
            seeded.turn = 0;
            seeded.remaining = want_remaining;
            if (seeded == s)
                return true;
        }
        return false;
    }
    for (int i = 0; i < params.r; ++i) {
        const RobotState &rob = s.robots[static_cast<std::size_t>(i)];
        if (rob.pose.x < 0 || rob.pose.x >= params.m || rob.pose.y < 0 || rob.pose.y >= params.m)
            return false;
        if (params.abstraction == Abstraction::legacy) {
            if (rob.motion != kMotionForward || rob.last_num_con != 0)
                return false;
        } else {
            if (rob.motion != 0 || rob.last_num_con != neighbor_count(s, i, params))
                return false;
        }
    }
    if (params.abstraction == Abstraction::counting && !collision_free(s, params))
        return false;
    if (params.init.kind == InitialConstraint::Kind::connected)
        return all_connected(s, params);
    return true;
}

VariableSignature signature(const ModelParams &params) {
    VariableSignature sig;
    std::uint64_t m = static_cast<std::uint64_t>(params.m);
    std::uint64_t r = static_cast<std::uint64_t>(params.r);
    bool legacy = params.abstraction == Abstraction::legacy;

    for (int i = 0; i < params.r; ++i) {
        std::vector<DomainVar> vars;
        bool reference = params.encoding == Encoding::relative && i == 0;
        if (!reference) {
            vars.push_back({"x", m});
            vars.push_back({"y", m});
            vars.push_back({"direction", 4});
        }
        if (legacy)
            vars.push_back({"motion", 2});
        else
            vars.push_back({"last_num_con", r});
        sig.robot_vars.push_back(std::move(vars));
    }

    switch (params.mode) {
    case Mode::strict:
        sig.global_vars.push_back({"turn", r});
        break;
    case Mode::nonstrict:
        sig.global_vars.push_back({"turn", r});
        sig.global_vars.push_back({"remaining", (1ull << params.r) - 1});
        break;
    case Mode::fair:
        // The legacy abstraction schedules fair moves without any state; the
        // counting abstraction carries a free selector.
        if (!legacy)
            sig.global_vars.push_back({"selector", r});
        break;
    case Mode::sync:
        break;
    }
    if (legacy) {
        if (params.encoding == Encoding::relative)
            sig.global_vars.push_back({"random", 2});
    } else {
        sig.global_vars.push_back({"random_turn", 3});
        sig.global_vars.push_back({"random_move", 2});
    }
    return sig;
}

std::uint64_t state_space_size(const VariableSignature &sig) {
    std::uint64_t total = 1;
    auto mul = [&](std::uint64_t v) {
        if (v == 0 || total > ~0ull / v)
            throw ConfigError("state space size exceeds 2^64");
        total *= v;
    };
    for (const auto &robot : sig.robot_vars)
        for (const DomainVar &var : robot)
            mul(var.size);
    for (const DomainVar &var : sig.global_vars)
        mul(var.size);
    return total;
}

} // namespace swarmcheck
