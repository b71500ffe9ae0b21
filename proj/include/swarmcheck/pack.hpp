#pragma once

#include "swarmcheck/model.hpp"

#include <cstdint>

namespace swarmcheck {

using StateKey = std::uint64_t;

// Bijective fixed-width packing of states for the configured parameters.
// Field order: per robot x, y, dir, then motion or last_num_con, followed by
// the scheduler bits. In the relative encoding robot 0 contributes only its
// non-pose variable. validate() guarantees the layout fits 64 bits.
class StatePacker {
public:
    explicit StatePacker(const ModelParams &params);

    StateKey pack(const SwarmState &s) const;
    SwarmState unpack(StateKey key) const;

    StateKey pack(const RelativeState &s) const;
    RelativeState unpack_relative(StateKey key) const;

    int bits() const { return total_bits_; }

private:
    StateKey pack_impl(const SwarmState &s, bool relative) const;
    SwarmState unpack_impl(StateKey key, bool relative) const;

    int m_;
    int r_;
    Abstraction abstraction_;
    Mode mode_;
    Encoding encoding_;
    int coord_bits_;
    int var_bits_;
    int total_bits_;
};

} // namespace swarmcheck
