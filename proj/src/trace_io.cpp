#include "swarmcheck/trace_io.hpp"

#include "swarmcheck/alpha.hpp"

#include <algorithm>
#include <sstream>

namespace swarmcheck {

namespace {

const char kDirGlyph[4] = {'^', '>', 'v', '<'};

// Robots outside the largest connected component (ties keep the component
// with the lowest robot index) render in lowercase.
std::uint32_t main_component(const SwarmState &s, const ModelParams &params) {
    std::uint32_t assigned = 0;
    std::uint32_t best = 0;
    int best_size = 0;
    for (int i = 0; i < params.r; ++i) {
        if (assigned & (1u << i))
            continue;
        std::uint32_t comp = 1u << i;
        std::uint32_t frontier = comp;
        while (frontier != 0) {
            std::uint32_t next = 0;
            for (int a = 0; a < params.r; ++a) {
                if (!(frontier & (1u << a)))
                    continue;
                for (int b = 0; b < params.r; ++b)
                    if (!(comp & (1u << b)) && !(next & (1u << b)) &&
                        within_range(s.robots[static_cast<std::size_t>(a)].pose,
                                     s.robots[static_cast<std::size_t>(b)].pose, params))
                        next |= 1u << b;
            }
            comp |= next;
            frontier = next;
        }
        assigned |= comp;
        int size = std::popcount(comp);
        if (size > best_size) {
            best_size = size;
            best = comp;
        }
    }
    return best;
}

void render_state(std::ostream &os, const SwarmState &s, const ModelParams &params,
                  std::size_t step, int mover, bool in_loop) {
    os << (in_loop ? "[loop] " : "") << "step " << step;
    if (mover == kAllRobots)
        os << " (mover: all)";
    else if (mover != kNoMover)
        os << " (mover: " << static_cast<char>('A' + mover) << ")";
    os << "\n";
    std::uint32_t main_comp = main_component(s, params);
    for (int y = params.m - 1; y >= 0; --y) {
        for (int x = 0; x < params.m; ++x) {
            char who = 0;
            char glyph = 0;
            for (int i = 0; i < params.r; ++i) {
                const Pose &p = s.robots[static_cast<std::size_t>(i)].pose;
                if (p.x == x && p.y == y) {
                    bool connected = main_comp & (1u << i);
                    who = static_cast<char>((connected ? 'A' : 'a') + i);
                    glyph = kDirGlyph[static_cast<int>(p.dir)];
                    break; // legacy co-location: show the lowest index
                }
            }
            if (who == 0)
                os << ". ";
            else
                os << who << glyph;
            if (x + 1 < params.m)
                os << ' ';
        }
        os << "\n";
    }
}

const SwarmState &state_base(const SwarmState &s) { return s; }
const SwarmState &state_base(const RelativeState &s) { return s.base; }

template <typename StateT>
std::string render_impl(const Lasso<StateT> &trace, const ModelParams &params) {
    std::ostringstream os;
    std::size_t step = 0;
    for (const auto &entry : trace.prefix)
        render_state(os, state_base(entry.state), params, step++, entry.mover, false);
    for (const auto &entry : trace.loop)
        render_state(os, state_base(entry.state), params, step++, entry.mover, true);
    if (!trace.loop.empty())
        os << "loop closes back to step " << trace.prefix.size() << "\n";
    return os.str();
}

nlohmann::json robot_to_json(const RobotState &rob, int id, const ModelParams &params) {
    nlohmann::json vars;
    if (params.abstraction == Abstraction::legacy)
        vars["motion"] = rob.motion == kMotionForward ? "forward" : "searching";
    else
        vars["last_num_con"] = rob.last_num_con;
    return {{"id", id},
            {"x", rob.pose.x},
            {"y", rob.pose.y},
            {"dir", to_string(rob.pose.dir)},
            {"vars", vars}};
}

nlohmann::json step_to_json(const SwarmState &s, int mover, const ModelParams &params) {
    nlohmann::json robots = nlohmann::json::array();
    for (int i = 0; i < params.r; ++i)
        robots.push_back(robot_to_json(s.robots[static_cast<std::size_t>(i)], i, params));
    nlohmann::json sched;
    if (params.mode == Mode::strict)
        sched["turn"] = s.turn;
    if (params.mode == Mode::nonstrict)
        sched["remaining"] = s.remaining;
    return {{"robots", robots}, {"mover", mover}, {"sched", sched}};
}

SwarmState step_from_json(const nlohmann::json &doc, const ModelParams &params, int &mover) {
    SwarmState s;
    const auto &robots = doc.at("robots");
    if (robots.size() != static_cast<std::size_t>(params.r))
        throw ConfigError("trace step has wrong robot count");
    for (const auto &item : robots) {
        int id = item.at("id").get<int>();
        if (id < 0 || id >= params.r)
            throw ConfigError("robot id out of range");
        RobotState &rob = s.robots[static_cast<std::size_t>(id)];
        rob.pose.x = item.at("x").get<int>();
        rob.pose.y = item.at("y").get<int>();
        rob.pose.dir = dir_from_string(item.at("dir").get<std::string>());
        const auto &vars = item.at("vars");
        if (params.abstraction == Abstraction::legacy)
            rob.motion = vars.at("motion").get<std::string>() == "searching" ? kMotionSearching
                                                                             : kMotionForward;
        else
            rob.last_num_con = vars.at("last_num_con").get<std::uint8_t>();
    }
    if (doc.contains("sched")) {
        const auto &sched = doc.at("sched");
        if (sched.contains("turn"))
            s.turn = sched.at("turn").get<std::uint8_t>();
        if (sched.contains("remaining"))
            s.remaining = sched.at("remaining").get<std::uint8_t>();
    }
    mover = doc.at("mover").get<int>();
    return s;
}

} // namespace

std::string render_trace_ascii(const GlobalLasso &trace, const ModelParams &params) {
    return render_impl(trace, params);
}

std::string render_trace_ascii(const RelativeLasso &trace, const ModelParams &params) {
    return render_impl(trace, params);
}

nlohmann::json trace_to_json(const GlobalLasso &trace, const ModelParams &params) {
    nlohmann::json prefix = nlohmann::json::array();
    nlohmann::json loop = nlohmann::json::array();
    for (const auto &entry : trace.prefix)
        prefix.push_back(step_to_json(entry.state, entry.mover, params));
    for (const auto &entry : trace.loop)
        loop.push_back(step_to_json(entry.state, entry.mover, params));
    return {{"encoding", "global"}, {"prefix", prefix}, {"loop", loop}};
}

nlohmann::json trace_to_json(const RelativeLasso &trace, const ModelParams &params) {
    nlohmann::json prefix = nlohmann::json::array();
    nlohmann::json loop = nlohmann::json::array();
    for (const auto &entry : trace.prefix)
        prefix.push_back(step_to_json(entry.state.base, entry.mover, params));
    for (const auto &entry : trace.loop)
        loop.push_back(step_to_json(entry.state.base, entry.mover, params));
    return {{"encoding", "relative"}, {"prefix", prefix}, {"loop", loop}};
}

GlobalLasso global_lasso_from_json(const nlohmann::json &doc, const ModelParams &params) {
    GlobalLasso out;
    for (const auto &step : doc.at("prefix")) {
        int mover = kNoMover;
        SwarmState s = step_from_json(step, params, mover);
        out.prefix.push_back({s, mover});
    }
    for (const auto &step : doc.at("loop")) {
        int mover = kNoMover;
        SwarmState s = step_from_json(step, params, mover);
        out.loop.push_back({s, mover});
    }
    return out;
}

RelativeLasso relative_lasso_from_json(const nlohmann::json &doc, const ModelParams &params) {
    GlobalLasso flat = global_lasso_from_json(doc, params);
    RelativeLasso out;
    for (const auto &entry : flat.prefix)
        out.prefix.push_back({RelativeState{entry.state}, entry.mover});
    for (const auto &entry : flat.loop)
        out.loop.push_back({RelativeState{entry.state}, entry.mover});
    return out;
}

std::vector<SwarmState> initial_states_from_json(const nlohmann::json &doc,
                                                 const ModelParams &params) {
    std::vector<SwarmState> out;
    for (const auto &entry : doc.at("states")) {
        const auto &robots = entry.at("robots");
        if (robots.size() != static_cast<std::size_t>(params.r))
            throw ConfigError("initial state has wrong robot count");

        // Expand unconstrained fields over their domains.
        std::vector<SwarmState> partial{SwarmState{}};
        int id = 0;
        for (const auto &item : robots) {
            std::vector<int> xs, ys, dirs, motions;
            if (item.contains("x"))
                xs.push_back(item.at("x").get<int>());
            else
                for (int v = 0; v < params.m; ++v)
                    xs.push_back(v);
            if (item.contains("y"))
                ys.push_back(item.at("y").get<int>());
            else
                for (int v = 0; v < params.m; ++v)
                    ys.push_back(v);
            if (item.contains("dir"))
                dirs.push_back(static_cast<int>(dir_from_string(item.at("dir").get<std::string>())));
            else
                for (int v = 0; v < 4; ++v)
                    dirs.push_back(v);
            if (params.abstraction == Abstraction::legacy && item.contains("motion"))
                motions.push_back(item.at("motion").get<std::string>() == "searching" ? 1 : 0);
            else
                motions.push_back(0);

            std::vector<SwarmState> expanded;
            for (const SwarmState &base : partial)
                for (int xv : xs)
                    for (int yv : ys)
                        for (int dv : dirs)
                            for (int mv : motions) {
                                SwarmState s = base;
                                RobotState &rob = s.robots[static_cast<std::size_t>(id)];
                                rob.pose = {xv, yv, static_cast<Dir>(dv)};
                                rob.motion = static_cast<std::uint8_t>(mv);
                                expanded.push_back(s);
                            }
            partial = std::move(expanded);
            ++id;
        }
        for (SwarmState &s : partial) {
            if (params.abstraction == Abstraction::counting) {
                if (!collision_free(s, params))
                    continue;
                for (int i = 0; i < params.r; ++i)
                    s.robots[static_cast<std::size_t>(i)].last_num_con =
                        static_cast<std::uint8_t>(neighbor_count(s, i, params));
            }
            out.push_back(s);
        }
    }
    if (out.empty())
        throw ConfigError("empty initial state set");
    return out;
}

} // namespace swarmcheck
