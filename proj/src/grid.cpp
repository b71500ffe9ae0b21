#include "swarmcheck/grid.hpp"

#include <algorithm>
#include <cassert>

namespace swarmcheck {

int torus_wrap(int v, int m) {
    assert(m >= 2);
    int r = v % m;
    return r < 0 ? r + m : r;
}

int axis_gap(int a, int b, int m) {
    int d = a - b;
    if (d < 0)
        d = -d;
    d %= m;
    return std::min(d, m - d);
}

int toroidal_distance(int ax, int ay, int bx, int by, int m) {
    return std::max(axis_gap(ax, bx, m), axis_gap(ay, by, m));
}

int toroidal_distance(const Pose &a, const Pose &b, int m) {
    return toroidal_distance(a.x, a.y, b.x, b.y, m);
}

Pose step_cell(const Pose &p, int m) {
    Pose q = p;
    switch (p.dir) {
    case Dir::n: q.y = torus_wrap(p.y + 1, m); break;
    case Dir::e: q.x = torus_wrap(p.x + 1, m); break;
    case Dir::s: q.y = torus_wrap(p.y - 1, m); break;
    case Dir::w: q.x = torus_wrap(p.x - 1, m); break;
    }
    return q;
}

Dir rotate_dir(Dir dir, Turn kind) {
    int d = static_cast<int>(dir);
    switch (kind) {
    case Turn::left: d += 3; break;
    case Turn::right: d += 1; break;
    case Turn::back: d += 2; break;
    }
    return static_cast<Dir>(d & 3);
}

std::pair<int, int> reframe_point(int x, int y, int m, RefChange change) {
    switch (change) {
    case RefChange::n_to_e: return {torus_wrap(m - y, m), x};
    case RefChange::n_to_s: return {torus_wrap(m - x, m), torus_wrap(m - y, m)};
    case RefChange::n_to_w: return {y, torus_wrap(m - x, m)};
    }
    assert(false);
    return {0, 0};
}

Dir reframe_dir(Dir dir, RefChange change) {
    // Each row is a net rotation of the heading cycle; n_to_e turns every
    // heading left once, n_to_s twice, n_to_w three times.
    int k = static_cast<int>(change);
    return static_cast<Dir>((static_cast<int>(dir) + 3 * k) & 3);
}

std::pair<int, int> apply_transform_cell(const FrameTransform &t, int x, int y, int m) {
    for (int i = 0; i < t.rot; ++i) {
        auto [rx, ry] = reframe_point(x, y, m, RefChange::n_to_e);
        x = rx;
        y = ry;
    }
    return {torus_wrap(x + t.dx, m), torus_wrap(y + t.dy, m)};
}

Pose apply_transform(const FrameTransform &t, const Pose &p, int m) {
    auto [x, y] = apply_transform_cell(t, p.x, p.y, m);
    Dir d = static_cast<Dir>((static_cast<int>(p.dir) + 3 * t.rot) & 3);
    return {x, y, d};
}

FrameTransform compose_transform(const FrameTransform &t1, const FrameTransform &t2, int m) {
    // t(p) = R1(R2 p + b2) + b1 = (R1 R2) p + (R1 b2 + b1)
    FrameTransform rot_only{t1.rot, 0, 0};
    auto [bx, by] = apply_transform_cell(rot_only, t2.dx, t2.dy, m);
    return {(t1.rot + t2.rot) & 3, torus_wrap(bx + t1.dx, m), torus_wrap(by + t1.dy, m)};
}

FrameTransform invert_transform(const FrameTransform &t, int m) {
    int inv_rot = (4 - t.rot) & 3;
    FrameTransform rot_only{inv_rot, 0, 0};
    auto [bx, by] = apply_transform_cell(rot_only, t.dx, t.dy, m);
    return {inv_rot, torus_wrap(-bx, m), torus_wrap(-by, m)};
}

FrameTransform transform_fixing(const Pose &ref, int m) {
    // Rotate until the reference heading becomes north, then translate its
    // cell to the origin. The direction component makes the choice unique.
    int rot = static_cast<int>(ref.dir);
    auto [rx, ry] = apply_transform_cell({rot, 0, 0}, ref.x, ref.y, m);
    return {rot, torus_wrap(-rx, m), torus_wrap(-ry, m)};
}

FrameTransform transform_placing(const Pose &ref, int m) {
    return invert_transform(transform_fixing(ref, m), m);
}

} // namespace swarmcheck
