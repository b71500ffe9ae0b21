#pragma once

#include <compare>
#include <cstdint>
#include <utility>

namespace swarmcheck {

// Headings on the grid. Order matches the quarter-turn cycle: a right turn
// is +1, a left turn -1, both mod 4.
enum class Dir : std::uint8_t { n = 0, e = 1, s = 2, w = 3 };

enum class Turn : std::uint8_t { left, right, back };

// One row of the reference-frame update table: the world transform applied
// to every non-reference robot when the reference changes heading away from
// north. The enum value is the number of n_to_e quarter turns the row equals.
enum class RefChange : std::uint8_t { n_to_e = 1, n_to_s = 2, n_to_w = 3 };

struct Pose {
    int x = 0;
    int y = 0;
    Dir dir = Dir::n;

    friend auto operator<=>(const Pose &, const Pose &) = default;
};

// Rotation followed by translation on the m x m torus. rot counts n_to_e
// quarter turns; (dx, dy) is added after rotating, both kept in [0, m).
// These form a group of order 4*m^2 acting freely on poses.
struct FrameTransform {
    int rot = 0;
    int dx = 0;
    int dy = 0;

    friend auto operator<=>(const FrameTransform &, const FrameTransform &) = default;
};

int torus_wrap(int v, int m);

// min(|a-b|, m-|a-b|) along one axis.
int axis_gap(int a, int b, int m);

// Chebyshev (king-move) distance on the torus.
int toroidal_distance(int ax, int ay, int bx, int by, int m);
int toroidal_distance(const Pose &a, const Pose &b, int m);

// One cell forward along the pose's heading, wrapping at the edges.
Pose step_cell(const Pose &p, int m);

Dir rotate_dir(Dir dir, Turn kind);

// Location update rows: n_to_e is (x, y) -> (m - y, x), n_to_s is
// (x, y) -> (m - x, m - y), n_to_w is (x, y) -> (y, m - x), all mod m.
std::pair<int, int> reframe_point(int x, int y, int m, RefChange change);

// Direction update rows: n_to_e maps n->w, s->e, e->n, w->s; n_to_s flips;
// n_to_w maps n->e, s->w, e->s, w->n.
Dir reframe_dir(Dir dir, RefChange change);

Pose apply_transform(const FrameTransform &t, const Pose &p, int m);
std::pair<int, int> apply_transform_cell(const FrameTransform &t, int x, int y, int m);

// compose(t1, t2) applies t2 first: apply(compose(t1, t2), p) = apply(t1, apply(t2, p)).
FrameTransform compose_transform(const FrameTransform &t1, const FrameTransform &t2, int m);
FrameTransform invert_transform(const FrameTransform &t, int m);

// The unique transform sending ref to ((0, 0), n), and its inverse.
FrameTransform transform_fixing(const Pose &ref, int m);
FrameTransform transform_placing(const Pose &ref, int m);

} // namespace swarmcheck
