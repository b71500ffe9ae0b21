#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swarmcheck/relative.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace swarmcheck;

namespace {

ModelParams base_params(int m, int r, Mode mode = Mode::strict,
                        Abstraction a = Abstraction::legacy) {
    ModelParams p;
    p.m = m;
    p.r = r;
    p.alpha = r > 1 ? 1 : 0;
    p.range = 1;
    p.abstraction = a;
    p.mode = mode;
    p.encoding = Encoding::relative;
    return p;
}

SwarmState random_state(std::mt19937 &rng, const ModelParams &p) {
    SwarmState s;
    for (int i = 0; i < p.r; ++i) {
        RobotState &rob = s.robots[static_cast<std::size_t>(i)];
        rob.pose = {static_cast<int>(rng() % static_cast<unsigned>(p.m)),
                    static_cast<int>(rng() % static_cast<unsigned>(p.m)),
                    static_cast<Dir>(rng() % 4)};
        if (p.abstraction == Abstraction::legacy)
            rob.motion = static_cast<std::uint8_t>(rng() % 2);
    }
    if (p.mode == Mode::strict)
        s.turn = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(p.r));
    if (p.mode == Mode::nonstrict)
        s.remaining = static_cast<std::uint8_t>(1 + rng() % ((1u << p.r) - 1));
    return s;
}

// Oracle: search all 4*m^2 transforms for the one that fixes the reference.
RelativeState brute_canonicalize(const SwarmState &s, int m, int r) {
    for (int rot = 0; rot < 4; ++rot)
        for (int dx = 0; dx < m; ++dx)
            for (int dy = 0; dy < m; ++dy) {
                FrameTransform t{rot, dx, dy};
                if (apply_transform(t, s.robots[0].pose, m) == kOriginNorth)
                    return {transform_state(t, s, m, r)};
            }
    REQUIRE(false);
    return {};
}

} // namespace

TEST_CASE("canonicalize matches the transform search") {
    // Reference already canonical: identity.
    SwarmState s;
    s.robots[0].pose = kOriginNorth;
    s.robots[1].pose = {4, 5, Dir::e};
    CHECK(canonicalize(s, 8, 2).base == s);

    // Pure translation.
    s.robots[0].pose = {2, 3, Dir::n};
    RelativeState rel = canonicalize(s, 8, 2);
    CHECK(rel.base.robots[1].pose == Pose{2, 2, Dir::e});
    CHECK(rel == brute_canonicalize(s, 8, 2));

    // Rotation: robot directly ahead of an east-facing reference sits north
    // of the origin in the reference frame.
    s.robots[0].pose = {0, 0, Dir::e};
    s.robots[1].pose = {1, 0, Dir::e};
    rel = canonicalize(s, 8, 2);
    CHECK(rel.base.robots[1].pose == Pose{0, 1, Dir::n});
    CHECK(rel == brute_canonicalize(s, 8, 2));

    std::mt19937 rng(3);
    ModelParams p = base_params(6, 3);
    for (int iter = 0; iter < 100; ++iter) {
        SwarmState g = random_state(rng, p);
        CHECK(canonicalize(g, p.m, p.r) == brute_canonicalize(g, p.m, p.r));
    }
}

TEST_CASE("lift inverts canonicalize") {
    std::mt19937 rng(5);
    ModelParams p = base_params(7, 3);
    for (int iter = 0; iter < 1000; ++iter) {
        SwarmState g = random_state(rng, p);
        RelativeState rel = canonicalize(g, p.m, p.r);
        CHECK(lift(rel, g.robots[0].pose, p.m, p.r) == g);
        CHECK(canonicalize(lift(rel, Pose{5, 1, Dir::w}, p.m, p.r), p.m, p.r) == rel);
    }

    // Lift at the origin pose changes nothing.
    SwarmState g = random_state(rng, p);
    RelativeState rel = canonicalize(g, p.m, p.r);
    CHECK(lift(rel, kOriginNorth, p.m, p.r) == rel.base);

    // All 4*m^2 lifts are distinct.
    int m = 3;
    std::set<SwarmState> lifted;
    for (int rot = 0; rot < 4; ++rot)
        for (int dx = 0; dx < m; ++dx)
            for (int dy = 0; dy < m; ++dy)
                lifted.insert(lift(rel, Pose{dx, dy, static_cast<Dir>(rot)}, m, p.r));
    CHECK(lifted.size() == static_cast<std::size_t>(4 * m * m));
}

TEST_CASE("equivariance and idempotence") {
    std::mt19937 rng(9);
    ModelParams p = base_params(5, 3);
    for (int iter = 0; iter < 200; ++iter) {
        SwarmState g = random_state(rng, p);
        FrameTransform t{static_cast<int>(rng() % 4),
                         static_cast<int>(rng() % static_cast<unsigned>(p.m)),
                         static_cast<int>(rng() % static_cast<unsigned>(p.m))};
        CHECK(canonicalize(transform_state(t, g, p.m, p.r), p.m, p.r) == canonicalize(g, p.m, p.r));
        Pose anywhere{static_cast<int>(rng() % static_cast<unsigned>(p.m)),
                      static_cast<int>(rng() % static_cast<unsigned>(p.m)),
                      static_cast<Dir>(rng() % 4)};
        CHECK(canonicalize(lift(canonicalize(g, p.m, p.r), anywhere, p.m, p.r), p.m, p.r) ==
              canonicalize(g, p.m, p.r));
    }
}

TEST_CASE("orbit") {
    std::mt19937 rng(13);
    ModelParams p = base_params(3, 2);
    SwarmState g = random_state(rng, p);
    auto orb = orbit(g, p.m, p.r);
    CHECK(orb.size() == 36);
    for (const SwarmState &member : orb)
        CHECK(canonicalize(member, p.m, p.r) == canonicalize(g, p.m, p.r));

    // Equal canonical forms imply same orbit (m=2, r=2 cross-check).
    ModelParams p2 = base_params(2, 2);
    for (int iter = 0; iter < 50; ++iter) {
        SwarmState a = random_state(rng, p2);
        SwarmState b = random_state(rng, p2);
        bool same_orbit = false;
        for (const SwarmState &member : orbit(a, 2, 2))
            if (member == b)
                same_orbit = true;
        CHECK(same_orbit == (canonicalize(a, 2, 2) == canonicalize(b, 2, 2)));
    }
}

TEST_CASE("reference moves update the others") {
    // Reference walks forward: everyone else shifts south.
    ModelParams p = base_params(8, 2);
    RelativeState rel;
    rel.base.robots[0].pose = kOriginNorth;
    rel.base.robots[0].motion = kMotionSearching; // k=0 < alpha keeps it walking
    rel.base.robots[1].pose = {3, 4, Dir::e};
    rel.base.turn = 0;
    auto succs = relative_successors(rel, p);
    REQUIRE(succs.size() == 1);
    CHECK(succs[0].mover == 0);
    CHECK(succs[0].state.base.robots[0].pose == kOriginNorth);
    CHECK(succs[0].state.base.robots[1].pose == Pose{3, 3, Dir::e});

    // Reference 180-degree recovery turn: the n_to_s row hits the others.
    rel.base.robots[0].motion = kMotionForward;
    rel.base.robots[1].pose = {3, 4, Dir::e};
    succs = relative_successors(rel, p);
    REQUIRE(succs.size() == 1);
    CHECK(succs[0].state.base.robots[0].motion == kMotionSearching);
    CHECK(succs[0].state.base.robots[1].pose == Pose{5, 4, Dir::w});
}

namespace {

// Test-local reachability over relative states, successor-function agnostic.
template <class Expand>
std::set<RelativeState> reach_relative(const ModelParams &params, Expand expand) {
    std::set<RelativeState> seen;
    std::vector<RelativeState> queue;
    for_each_initial_relative(params, [&](const RelativeState &rel) {
        if (seen.insert(rel).second)
            queue.push_back(rel);
    });
    while (!queue.empty()) {
        RelativeState cur = queue.back();
        queue.pop_back();
        for (const RelativeState &next : expand(cur))
            if (seen.insert(next).second)
                queue.push_back(next);
    }
    return seen;
}

std::vector<std::pair<RelativeState, int>> canonical_global_successors(const RelativeState &rel,
                                                                       const ModelParams &params) {
    SwarmState g = lift(rel, kOriginNorth, params.m, params.r);
    std::vector<std::pair<RelativeState, int>> out;
    for (const Successor &succ : global_successors(g, params))
        out.emplace_back(canonicalize(succ.state, params.m, params.r), succ.mover);
    std::sort(out.begin(), out.end(),
              [](const auto &a, const auto &b) { return std::tie(a.first, a.second) < std::tie(b.first, b.second); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

TEST_CASE("relative successors bisimulate canonicalized global successors") {
    for (Mode mode : {Mode::strict, Mode::nonstrict, Mode::fair}) {
        for (Abstraction a : {Abstraction::legacy, Abstraction::counting}) {
            ModelParams p = base_params(3, 2, mode, a);
            auto states = reach_relative(p, [&](const RelativeState &rel) {
                std::vector<RelativeState> next;
                for (const RelSuccessor &succ : relative_successors(rel, p))
                    next.push_back(succ.state);
                return next;
            });
            CHECK(states.size() > 0);
            for (const RelativeState &rel : states) {
                auto direct = relative_successors(rel, p);
                std::vector<std::pair<RelativeState, int>> got;
                for (const RelSuccessor &succ : direct)
                    got.emplace_back(succ.state, succ.mover);
                auto expected = canonical_global_successors(rel, p);
                CHECK(got == expected);
            }
        }
    }
}

TEST_CASE("lift_trace") {
    ModelParams p = base_params(8, 1);
    p.alpha = 0;

    CHECK(lift_trace({}, {2, 3, Dir::e}, p).empty());

    // One forward step of the reference.
    RelativeState rel;
    rel.base.robots[0].pose = kOriginNorth;
    auto succs = relative_successors(rel, p);
    REQUIRE(succs.size() == 1);
    RelativeTrace trace{{rel, 0}, {succs[0].state, kNoMover}};
    GlobalTrace lifted = lift_trace(trace, {2, 3, Dir::e}, p);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0].state.robots[0].pose == Pose{2, 3, Dir::e});
    CHECK(lifted[1].state.robots[0].pose == Pose{3, 3, Dir::e});

    // Random relative walks lift to valid global traces that canonicalize
    // back to the originals.
    std::mt19937 rng(17);
    ModelParams p2 = base_params(4, 2, Mode::nonstrict);
    for (int iter = 0; iter < 50; ++iter) {
        RelativeTrace walk;
        RelativeState cur;
        cur.base.robots[0].pose = kOriginNorth;
        cur.base.robots[1].pose = {static_cast<int>(rng() % 4u), static_cast<int>(rng() % 4u),
                                   static_cast<Dir>(rng() % 4)};
        cur.base.remaining = 0b11;
        for (int step = 0; step < 8; ++step) {
            auto options = relative_successors(cur, p2);
            const RelSuccessor &pick = options[rng() % options.size()];
            walk.push_back({cur, pick.mover});
            cur = pick.state;
        }
        walk.push_back({cur, kNoMover});

        Pose start{static_cast<int>(rng() % 4u), static_cast<int>(rng() % 4u),
                   static_cast<Dir>(rng() % 4)};
        GlobalTrace lifted2 = lift_trace(walk, start, p2);
        REQUIRE(lifted2.size() == walk.size());
        for (std::size_t i = 0; i < walk.size(); ++i)
            CHECK(canonicalize(lifted2[i].state, p2.m, p2.r) == walk[i].state);
        for (std::size_t i = 0; i + 1 < lifted2.size(); ++i) {
            bool valid = false;
            for (const Successor &succ : global_successors(lifted2[i].state, p2))
                if (succ.state == lifted2[i + 1].state && succ.mover == walk[i].mover)
                    valid = true;
            CHECK(valid);
        }
    }

    // A corrupted step is reported with its index.
    RelativeTrace bad = trace;
    bad[1].state.base.robots[0].motion = kMotionSearching;
    try {
        lift_trace(bad, {0, 0, Dir::n}, p);
        CHECK(false);
    } catch (const TraceReplayError &err) {
        CHECK(err.step_index == 0);
    }
}
