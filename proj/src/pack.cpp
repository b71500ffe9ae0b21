#include "swarmcheck/pack.hpp"

#include <bit>
#include <cassert>

namespace swarmcheck {

namespace {

int ceil_log2(std::uint32_t v) {
    if (v <= 1)
        return 0;
    return std::bit_width(v - 1);
}

} // namespace

StatePacker::StatePacker(const ModelParams &params)
    : m_(params.m),
      r_(params.r),
      abstraction_(params.abstraction),
      mode_(params.mode),
      encoding_(params.encoding) {
    coord_bits_ = ceil_log2(static_cast<std::uint32_t>(m_));
    var_bits_ = abstraction_ == Abstraction::legacy ? 1 : ceil_log2(static_cast<std::uint32_t>(r_));
    int per_robot = 2 * coord_bits_ + 2 + var_bits_;
    total_bits_ = r_ * per_robot;
    if (encoding_ == Encoding::relative)
        total_bits_ -= 2 * coord_bits_ + 2;
    if (mode_ == Mode::strict)
        total_bits_ += ceil_log2(static_cast<std::uint32_t>(r_));
    else if (mode_ == Mode::nonstrict)
        total_bits_ += r_;
    assert(total_bits_ <= 64);
}

StateKey StatePacker::pack_impl(const SwarmState &s, bool relative) const {
    StateKey key = 0;
    int shift = 0;
    auto put = [&](std::uint64_t v, int bits) {
        key |= v << shift;
        shift += bits;
    };
    for (int i = 0; i < r_; ++i) {
        const RobotState &rob = s.robots[static_cast<std::size_t>(i)];
        if (!(relative && i == 0)) {
            put(static_cast<std::uint64_t>(rob.pose.x), coord_bits_);
            put(static_cast<std::uint64_t>(rob.pose.y), coord_bits_);
            put(static_cast<std::uint64_t>(rob.pose.dir), 2);
        }
        if (abstraction_ == Abstraction::legacy)
            put(rob.motion, var_bits_);
        else
            put(rob.last_num_con, var_bits_);
    }
    if (mode_ == Mode::strict)
        put(s.turn, ceil_log2(static_cast<std::uint32_t>(r_)));
    else if (mode_ == Mode::nonstrict)
        put(s.remaining, r_);
    assert(shift == total_bits_);
    return key;
}

SwarmState StatePacker::unpack_impl(StateKey key, bool relative) const {
    SwarmState s;
    int shift = 0;
    auto get = [&](int bits) -> std::uint64_t {
        std::uint64_t v = (key >> shift) & ((bits == 64 ? ~0ull : (1ull << bits) - 1));
        shift += bits;
        return v;
    };
    for (int i = 0; i < r_; ++i) {
        RobotState &rob = s.robots[static_cast<std::size_t>(i)];
        if (relative && i == 0) {
            rob.pose = kOriginNorth;
        } else {
            rob.pose.x = static_cast<int>(get(coord_bits_));
            rob.pose.y = static_cast<int>(get(coord_bits_));
            rob.pose.dir = static_cast<Dir>(get(2));
        }
        if (abstraction_ == Abstraction::legacy)
            rob.motion = static_cast<std::uint8_t>(get(var_bits_));
        else
            rob.last_num_con = static_cast<std::uint8_t>(get(var_bits_));
    }
    if (mode_ == Mode::strict)
        s.turn = static_cast<std::uint8_t>(get(ceil_log2(static_cast<std::uint32_t>(r_))));
    else if (mode_ == Mode::nonstrict)
        s.remaining = static_cast<std::uint8_t>(get(r_));
    return s;
}

StateKey StatePacker::pack(const SwarmState &s) const {
    assert(encoding_ == Encoding::global);
    return pack_impl(s, false);
}

SwarmState StatePacker::unpack(StateKey key) const {
    assert(encoding_ == Encoding::global);
    return unpack_impl(key, false);
}

StateKey StatePacker::pack(const RelativeState &s) const {
    assert(encoding_ == Encoding::relative);
    assert(s.base.robots[0].pose == kOriginNorth);
    return pack_impl(s.base, true);
}

RelativeState StatePacker::unpack_relative(StateKey key) const {
    assert(encoding_ == Encoding::relative);
    return {unpack_impl(key, true)};
}

} // namespace swarmcheck
