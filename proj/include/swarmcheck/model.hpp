#pragma once

#include "swarmcheck/grid.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swarmcheck {

inline constexpr int kMaxRobots = 8;

// Mover index used for the synchronous pseudo-step where every robot acts.
inline constexpr int kAllRobots = -1;

enum class Abstraction : std::uint8_t {
    legacy,   // per-robot motion flag {forward, searching}; co-location allowed
    counting, // per-robot neighbour count memory; explicit collision avoidance
};

enum class Mode : std::uint8_t { strict, nonstrict, fair, sync };
enum class Encoding : std::uint8_t { global, relative };
enum class Metric : std::uint8_t { chebyshev, manhattan, euclidean };

// Legacy motion values.
inline constexpr std::uint8_t kMotionForward = 0;
inline constexpr std::uint8_t kMotionSearching = 1;

struct RobotState {
    Pose pose;
    std::uint8_t motion = kMotionForward; // legacy only, 0 otherwise
    std::uint8_t last_num_con = 0;        // counting only, 0 otherwise

    friend auto operator<=>(const RobotState &, const RobotState &) = default;
};

// Full configuration of the swarm plus scheduler bookkeeping. Which scheduler
// field is meaningful depends on the mode: strict keeps `turn`, nonstrict
// keeps the `remaining` bitmask of robots yet to move this round; fair and
// sync carry nothing. Unused fields stay zero so that equality and packing
// see a canonical representation.
struct SwarmState {
    std::array<RobotState, kMaxRobots> robots{};
    std::uint8_t turn = 0;
    std::uint8_t remaining = 0;

    friend auto operator<=>(const SwarmState &, const SwarmState &) = default;
};

// A swarm state expressed in the reference robot's frame: robots[0].pose is
// pinned to ((0, 0), n) and only its non-pose variables carry information.
struct RelativeState {
    SwarmState base;

    friend auto operator<=>(const RelativeState &, const RelativeState &) = default;
};

inline constexpr Pose kOriginNorth{0, 0, Dir::n};

struct InitialConstraint {
    enum class Kind : std::uint8_t { all, connected, explicit_list };

    Kind kind = Kind::all;
    std::vector<SwarmState> states; // explicit_list only

    static InitialConstraint all() { return {}; }
    static InitialConstraint connected() { return {Kind::connected, {}}; }
    static InitialConstraint explicit_list(std::vector<SwarmState> s) {
        return {Kind::explicit_list, std::move(s)};
    }
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModelParams {
    int m = 8;
    int r = 3;
    int alpha = 1;
    int range = 1;
    Abstraction abstraction = Abstraction::legacy;
    Mode mode = Mode::strict;
    Encoding encoding = Encoding::global;
    Metric metric = Metric::chebyshev;
    InitialConstraint init;

    // Throws ConfigError on invalid combinations; returns human-readable
    // warnings for permitted-but-dubious settings (e.g. range covering the
    // whole torus).
    std::vector<std::string> validate() const;
};

bool within_range(const Pose &a, const Pose &b, const ModelParams &params);

const char *to_string(Abstraction a);
const char *to_string(Mode m);
const char *to_string(Encoding e);
const char *to_string(Metric m);
const char *to_string(Dir d);

Abstraction abstraction_from_string(const std::string &s);
Mode mode_from_string(const std::string &s);
Encoding encoding_from_string(const std::string &s);
Metric metric_from_string(const std::string &s);
Dir dir_from_string(const std::string &s);

} // namespace swarmcheck
