#include "swarmcheck/model.hpp"

#include <bit>

namespace swarmcheck {

namespace {

int ceil_log2(std::uint32_t v) {
    if (v <= 1)
        return 0;
    return std::bit_width(v - 1);
}

} // namespace

std::vector<std::string> ModelParams::validate() const {
    if (m < 2)
        throw ConfigError("grid side m must be >= 2");
    if (r < 1 || r > kMaxRobots)
        throw ConfigError("robot count must be in [1, " + std::to_string(kMaxRobots) + "]");
    if (alpha < 0)
        throw ConfigError("alpha must be >= 0");
    if (alpha > r - 1)
        throw ConfigError("alpha must be <= r - 1");
    if (range < 0)
        throw ConfigError("range must be >= 0");
    if (mode == Mode::sync && abstraction == Abstraction::counting)
        throw ConfigError("sync mode is not supported for the counting abstraction");
    if (abstraction == Abstraction::counting && r > m * m)
        throw ConfigError("counting abstraction needs at least one cell per robot");
    if (init.kind == InitialConstraint::Kind::explicit_list && init.states.empty())
        throw ConfigError("explicit initial constraint with no states");

    // Packed-state bit budget: coordinates, heading and the per-robot
    // variable for each robot, plus scheduler bits.
    int per_robot = 2 * ceil_log2(static_cast<std::uint32_t>(m)) + 2;
    per_robot += abstraction == Abstraction::legacy ? 1 : ceil_log2(static_cast<std::uint32_t>(r));
    int bits = r * per_robot;
    if (encoding == Encoding::relative)
        bits -= 2 * ceil_log2(static_cast<std::uint32_t>(m)) + 2;
    if (mode == Mode::strict)
        bits += ceil_log2(static_cast<std::uint32_t>(r));
    else if (mode == Mode::nonstrict)
        bits += r;
    if (bits > 64)
        throw ConfigError("state does not fit a 64-bit key for these parameters");

    std::vector<std::string> warnings;
    if (range >= m)
        warnings.push_back("range >= m: communication covers the whole torus, connectivity is vacuous");
    return warnings;
}

bool within_range(const Pose &a, const Pose &b, const ModelParams &params) {
    int gx = axis_gap(a.x, b.x, params.m);
    int gy = axis_gap(a.y, b.y, params.m);
    switch (params.metric) {
    case Metric::chebyshev: return std::max(gx, gy) <= params.range;
    case Metric::manhattan: return gx + gy <= params.range;
    case Metric::euclidean: return gx * gx + gy * gy <= params.range * params.range;
    }
    return false;
}

const char *to_string(Abstraction a) {
    return a == Abstraction::legacy ? "legacy" : "new";
}

const char *to_string(Mode m) {
    switch (m) {
    case Mode::strict: return "strict";
    case Mode::nonstrict: return "nonstrict";
    case Mode::fair: return "fair";
    case Mode::sync: return "sync";
    }
    return "?";
}

const char *to_string(Encoding e) {
    return e == Encoding::global ? "global" : "relative";
}

const char *to_string(Metric m) {
    switch (m) {
    case Metric::chebyshev: return "chebyshev";
    case Metric::manhattan: return "manhattan";
    case Metric::euclidean: return "euclidean";
    }
    return "?";
}

const char *to_string(Dir d) {
    switch (d) {
    case Dir::n: return "n";
    case Dir::e: return "e";
    case Dir::s: return "s";
    case Dir::w: return "w";
    }
    return "?";
}

Abstraction abstraction_from_string(const std::string &s) {
    if (s == "legacy")
        return Abstraction::legacy;
    if (s == "new")
        return Abstraction::counting;
    throw ConfigError("unknown abstraction: " + s);
}

Mode mode_from_string(const std::string &s) {
    if (s == "strict")
        return Mode::strict;
    if (s == "nonstrict")
        return Mode::nonstrict;
    if (s == "fair")
        return Mode::fair;
    if (s == "sync")
        return Mode::sync;
    throw ConfigError("unknown mode: " + s);
}

Encoding encoding_from_string(const std::string &s) {
    if (s == "global")
        return Encoding::global;
    if (s == "relative")
        return Encoding::relative;
    throw ConfigError("unknown encoding: " + s);
}

Metric metric_from_string(const std::string &s) {
    if (s == "chebyshev")
        return Metric::chebyshev;
    if (s == "manhattan")
        return Metric::manhattan;
    if (s == "euclidean")
        return Metric::euclidean;
    throw ConfigError("unknown metric: " + s);
}

Dir dir_from_string(const std::string &s) {
    if (s == "n")
        return Dir::n;
    if (s == "e")
        return Dir::e;
    if (s == "s")
        return Dir::s;
    if (s == "w")
        return Dir::w;
    throw ConfigError("unknown direction: " + s);
}

} // namespace swarmcheck
