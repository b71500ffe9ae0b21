#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swarmcheck/alpha.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

using namespace swarmcheck;

namespace {

ModelParams legacy_params(int m, int r, Mode mode = Mode::strict) {
    ModelParams p;
    p.m = m;
    p.r = r;
    p.alpha = 1;
    p.range = 1;
    p.abstraction = Abstraction::legacy;
    p.mode = mode;
    p.encoding = Encoding::global;
    return p;
}

ModelParams counting_params(int m, int r, Mode mode = Mode::strict) {
    ModelParams p = legacy_params(m, r, mode);
    p.abstraction = Abstraction::counting;
    return p;
}

SwarmState make_state(std::initializer_list<Pose> poses) {
    SwarmState s;
    int i = 0;
    for (const Pose &p : poses)
        s.robots[static_cast<std::size_t>(i++)].pose = p;
    return s;
}

} // namespace

TEST_CASE("neighbor_count") {
    ModelParams p = legacy_params(5, 2);
    SwarmState same = make_state({{2, 2, Dir::n}, {2, 2, Dir::e}});
    CHECK(neighbor_count(same, 0, p) == 1);
    CHECK(neighbor_count(same, 1, p) == 1);

    ModelParams p3 = legacy_params(5, 3);
    SwarmState chain = make_state({{0, 0, Dir::n}, {0, 4, Dir::n}, {0, 2, Dir::n}});
    CHECK(neighbor_count(chain, 0, p3) == 1);
    CHECK(neighbor_count(chain, 1, p3) == 1);
    CHECK(neighbor_count(chain, 2, p3) == 0);

    ModelParams p1 = legacy_params(4, 1);
    p1.alpha = 0;
    SwarmState solo = make_state({{1, 1, Dir::n}});
    CHECK(neighbor_count(solo, 0, p1) == 0);
}

TEST_CASE("all_connected is component-wise") {
    ModelParams p = legacy_params(8, 3);
    // A-B and B-C in range, A-C not.
    SwarmState chain = make_state({{0, 0, Dir::n}, {1, 0, Dir::n}, {2, 0, Dir::n}});
    CHECK(within_range(chain.robots[0].pose, chain.robots[1].pose, p));
    CHECK(!within_range(chain.robots[0].pose, chain.robots[2].pose, p));
    CHECK(all_connected(chain, p));

    SwarmState spread = make_state({{0, 0, Dir::n}, {2, 2, Dir::n}, {4, 4, Dir::n}});
    ModelParams p5 = legacy_params(5, 3);
    CHECK(!all_connected(spread, p5));

    // On the 2x2 torus every pair of cells is within range 1.
    ModelParams p2 = legacy_params(2, 3);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                SwarmState s = make_state(
                    {{a % 2, a / 2, Dir::n}, {b % 2, b / 2, Dir::n}, {c % 2, c / 2, Dir::n}});
                CHECK(all_connected(s, p2));
            }

    ModelParams p1 = legacy_params(5, 1);
    p1.alpha = 0;
    CHECK(all_connected(make_state({{3, 3, Dir::w}}), p1));
}

TEST_CASE("legacy decision branches") {
    ModelParams p = legacy_params(8, 2);

    // Disconnected default robot turns back in place and starts searching.
    SwarmState lost = make_state({{1, 1, Dir::n}, {5, 5, Dir::n}});
    auto branches = robot_decision_legacy(lost, 0, p);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].pose == Pose{1, 1, Dir::s});
    CHECK(branches[0].motion == kMotionSearching);

    // Searching robot back in range turns left or right and resumes.
    SwarmState regained = make_state({{1, 1, Dir::n}, {1, 2, Dir::n}});
    regained.robots[0].motion = kMotionSearching;
    branches = robot_decision_legacy(regained, 0, p);
    REQUIRE(branches.size() == 2);
    std::set<Dir> dirs{branches[0].pose.dir, branches[1].pose.dir};
    CHECK(dirs == std::set<Dir>{Dir::w, Dir::e});
    for (const RobotState &b : branches) {
        CHECK(b.pose.x == 1);
        CHECK(b.pose.y == 1);
        CHECK(b.motion == kMotionForward);
    }

    // Connected default robot moves forward.
    SwarmState fine = make_state({{1, 1, Dir::e}, {1, 2, Dir::n}});
    branches = robot_decision_legacy(fine, 0, p);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].pose == Pose{2, 1, Dir::e});
    CHECK(branches[0].motion == kMotionForward);

    // Searching while still under alpha: keeps walking.
    SwarmState searching = make_state({{1, 1, Dir::s}, {5, 5, Dir::n}});
    searching.robots[0].motion = kMotionSearching;
    branches = robot_decision_legacy(searching, 0, p);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].pose == Pose{1, 0, Dir::s});
    CHECK(branches[0].motion == kMotionSearching);
}

TEST_CASE("counting decision branches") {
    ModelParams p = counting_params(8, 2);

    //

    // Lost (k < prev, k < alpha): orient back, then move.
    SwarmState lost = make_state({{1, 1, Dir::n}, {5, 5, Dir::n}});
    lost.robots[0].last_num_con = 1;
    auto branches = robot_decision_counting(lost, 0, p);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].pose == Pose{1, 0, Dir::s});
    CHECK(branches[0].last_num_con == 0);

    // Regained (k > prev): three reorientations, all forward cells free.
    SwarmState regained = make_state({{1, 1, Dir::n}, {2, 2, Dir::n}});
    regained.robots[0].last_num_con = 0;
    regained.robots[1].last_num_con = 0;
    branches = robot_decision_counting(regained, 0, p);
    REQUIRE(branches.size() == 3);
    std::set<Pose> got;
    for (const RobotState &b : branches) {
        got.insert(b.pose);
        CHECK(b.last_num_con == 1);
    }
    CHECK(got == std::set<Pose>{{0, 1, Dir::w}, {2, 1, Dir::e}, {1, 0, Dir::s}});

    // Steady state with the forward cell occupied: stay and sidestep turn.
    SwarmState blocked = make_state({{1, 1, Dir::n}, {1, 2, Dir::s}});
    blocked.robots[0].last_num_con = 1;
    blocked.robots[1].last_num_con = 1;
    branches = robot_decision_counting(blocked, 0, p);
    REQUIRE(branches.size() == 2);
    for (const RobotState &b : branches) {
        CHECK(b.pose.x == 1);
        CHECK(b.pose.y == 1);
        CHECK(b.last_num_con == 1);
    }
    std::set<Dir> dirs{branches[0].pose.dir, branches[1].pose.dir};
    CHECK(dirs == std::set<Dir>{Dir::w, Dir::e});
}

TEST_CASE("decision totality") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 500; ++iter) {
        int m = 2 + static_cast<int>(rng() % 5);
        int r = 1 + static_cast<int>(rng() % 3);
        ModelParams p = rng() % 2 ? legacy_params(m, r) : counting_params(m, r);
        p.alpha = static_cast<int>(rng() % static_cast<unsigned>(r));
        SwarmState s;
        for (int i = 0; i < r; ++i) {
            RobotState &rob = s.robots[static_cast<std::size_t>(i)];
            rob.pose = {static_cast<int>(rng() % static_cast<unsigned>(m)),
                        static_cast<int>(rng() % static_cast<unsigned>(m)),
                        static_cast<Dir>(rng() % 4)};
            if (p.abstraction == Abstraction::legacy)
                rob.motion = static_cast<std::uint8_t>(rng() % 2);
            else
                rob.last_num_con = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(r));
        }
        if (p.abstraction == Abstraction::counting && !collision_free(s, p))
            continue;
        for (int i = 0; i < r; ++i)
            CHECK(!robot_decision(s, i, p).empty());
    }
}

TEST_CASE("schedule strict cycles") {
    ModelParams p = legacy_params(4, 3);
    SwarmState s;
    s.turn = 2;
    auto steps = schedule(s, p);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].mover == 2);
    CHECK(steps[0].next_turn == 0);
}

TEST_CASE("schedule nonstrict subset bookkeeping") {
    ModelParams p = legacy_params(4, 3, Mode::nonstrict);
    SwarmState s;
    s.remaining = 0b110; // robots 1 and 2 still to move
    auto steps = schedule(s, p);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].mover == 1);
    CHECK(steps[0].next_remaining == 0b100);
    CHECK(steps[1].mover == 2);
    CHECK(steps[1].next_remaining == 0b010);

    // Last robot of the round resets the set.
    s.remaining = 0b010;
    steps = schedule(s, p);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].mover == 1);
    CHECK(steps[0].next_remaining == 0b111);
}

TEST_CASE("nonstrict rounds move every robot exactly once") {
    // Exhaustive simulation over every order of a round.
    ModelParams p = legacy_params(3, 3, Mode::nonstrict);
    struct Walk {
        std::uint8_t remaining;
        std::vector<int> movers;
    };
    std::vector<Walk> stack{{0b111, {}}};
    int finished = 0;
    while (!stack.empty()) {
        Walk w = stack.back();
        stack.pop_back();
        if (w.movers.size() == 3) {
            ++finished;
            std::sort(w.movers.begin(), w.movers.end());
            CHECK(w.movers == std::vector<int>{0, 1, 2});
            CHECK(w.remaining == 0b111); // reset happened
            continue;
        }
        SwarmState s;
        s.remaining = w.remaining;
        for (const SchedStep &step : schedule(s, p)) {
            Walk next = w;
            next.movers.push_back(step.mover);
            next.remaining = step.next_remaining;
            stack.push_back(next);
        }
    }
    CHECK(finished == 6); // 3! orders
}

TEST_CASE("schedule fair offers every robot") {
    ModelParams p = legacy_params(4, 3, Mode::fair);
    SwarmState s;
    auto steps = schedule(s, p);
    REQUIRE(steps.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(steps[static_cast<std::size_t>(i)].mover == i);
}

TEST_CASE("global successors") {
    // Single robot walking north, no events possible.
    ModelParams p1 = legacy_params(3, 1);
    p1.alpha = 0;
    SwarmState solo = make_state({{0, 0, Dir::n}});
    auto succs = global_successors(solo, p1);
    REQUIRE(succs.size() == 1);
    CHECK(succs[0].state.robots[0].pose == Pose{0, 1, Dir::n});
    CHECK(succs[0].mover == 0);

    // Strict mode successor count equals the scheduled robot's branch count.
    std::mt19937 rng(41);
    for (int iter = 0; iter < 200; ++iter) {
        int m = 2 + static_cast<int>(rng() % 4);
        int r = 1 + static_cast<int>(rng() % 3);
        ModelParams p = legacy_params(m, r);
        p.alpha = static_cast<int>(rng() % static_cast<unsigned>(r));
        SwarmState s;
        for (int i = 0; i < r; ++i) {
            s.robots[static_cast<std::size_t>(i)].pose = {
                static_cast<int>(rng() % static_cast<unsigned>(m)),
                static_cast<int>(rng() % static_cast<unsigned>(m)), static_cast<Dir>(rng() % 4)};
            s.robots[static_cast<std::size_t>(i)].motion = static_cast<std::uint8_t>(rng() % 2);
        }
        s.turn = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(r));
        CHECK(global_successors(s, p).size() == robot_decision(s, s.turn, p).size());
    }
}

TEST_CASE("legacy transitions touch one robot and one cell") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 300; ++iter) {
        int m = 2 + static_cast<int>(rng() % 4);
        int r = 2 + static_cast<int>(rng() % 2);
        Mode mode = std::array{Mode::strict, Mode::nonstrict, Mode::fair}[rng() % 3];
        ModelParams p = legacy_params(m, r, mode);
        SwarmState s;
        for (int i = 0; i < r; ++i) {
            s.robots[static_cast<std::size_t>(i)].pose = {
                static_cast<int>(rng() % static_cast<unsigned>(m)),
                static_cast<int>(rng() % static_cast<unsigned>(m)), static_cast<Dir>(rng() % 4)};
            s.robots[static_cast<std::size_t>(i)].motion = static_cast<std::uint8_t>(rng() % 2);
        }
        if (mode == Mode::nonstrict)
            s.remaining = static_cast<std::uint8_t>(1 + rng() % ((1u << r) - 1));
        if (mode == Mode::strict)
            s.turn = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(r));
        for (const Successor &succ : global_successors(s, p)) {
            int changed = 0;
            for (int i = 0; i < r; ++i) {
                const RobotState &a = s.robots[static_cast<std::size_t>(i)];
                const RobotState &b = succ.state.robots[static_cast<std::size_t>(i)];
                if (a != b) {
                    ++changed;
                    CHECK(i == succ.mover);
                    CHECK(toroidal_distance(a.pose, b.pose, m) <= 1);
                }
            }
            CHECK(changed <= 1);
        }
    }
}

TEST_CASE("state space sizes reproduce the published totals") {
    auto total = [](int m, int r, Abstraction a, Encoding e, Mode mode) {
        ModelParams p;
        p.m = m;
        p.r = r;
        p.abstraction = a;
        p.encoding = e;
        p.mode = mode;
        return state_space_size(signature(p));
    };

    CHECK(total(8, 3, Abstraction::legacy, Encoding::global, Mode::fair) == 134'217'728);
    CHECK(total(8, 3, Abstraction::legacy, Encoding::global, Mode::strict) == 402'653'184);
    CHECK(total(8, 3, Abstraction::legacy, Encoding::global, Mode::nonstrict) == 2'818'572'288);
    CHECK(total(8, 3, Abstraction::legacy, Encoding::relative, Mode::fair) == 1'048'576);
    CHECK(total(8, 3, Abstraction::legacy, Encoding::relative, Mode::strict) == 3'145'728);
    CHECK(total(8, 3, Abstraction::legacy, Encoding::relative, Mode::nonstrict) == 22'020'096);
    CHECK(total(8, 3, Abstraction::counting, Encoding::relative, Mode::fair) == 31'850'496);
    CHECK(total(8, 3, Abstraction::counting, Encoding::relative, Mode::strict) == 31'850'496);
    CHECK(total(8, 3, Abstraction::counting, Encoding::relative, Mode::nonstrict) == 222'953'472);

    // The product formulas, spelled out.
    CHECK(total(8, 3, Abstraction::legacy, Encoding::global, Mode::strict) ==
          512ull * 512 * 512 * 3);
    CHECK(total(8, 3, Abstraction::legacy, Encoding::relative, Mode::strict) ==
          512ull * 512 * 2 * 3 * 2);
    CHECK(total(8, 3, Abstraction::counting, Encoding::relative, Mode::strict) ==
          256ull * 256 * 3 * 3 * 2 * 27);
}

TEST_CASE("signature counts the relative reduction") {
    for (int m : {2, 3, 5, 8}) {
        ModelParams g = legacy_params(m, 3);
        ModelParams rel = g;
        rel.encoding = Encoding::relative;
        // The relative form materializes the extra random coin; compare the
        // branching (coin-free) quotient instead, which is exactly d * m^2.
        std::uint64_t ratio = state_space_size(signature(g)) * 2 /
                              state_space_size(signature(rel));
        CHECK(ratio == static_cast<std::uint64_t>(4 * m * m));
    }
}

TEST_CASE("initial states") {
    ModelParams p1 = legacy_params(2, 1);
    p1.alpha = 0;
    CHECK(initial_states(p1).size() == 16);

    ModelParams pc = counting_params(2, 2);
    auto init = initial_states(pc);
    CHECK(init.size() == 4 * 4 * 3 * 4); // ordered distinct cells, 4 dirs each
    for (const SwarmState &s : init) {
        CHECK(collision_free(s, pc));
        for (int i = 0; i < 2; ++i)
            CHECK(s.robots[static_cast<std::size_t>(i)].last_num_con ==
                  neighbor_count(s, i, pc));
        CHECK(is_initial_state(s, pc));
    }

    SwarmState one = make_state({{1, 1, Dir::e}, {0, 0, Dir::n}, {1, 0, Dir::s}});
    ModelParams pe = legacy_params(4, 3);
    pe.init = InitialConstraint::explicit_list({one});
    auto single = initial_states(pe);
    REQUIRE(single.size() == 1);
    CHECK(single[0].robots[0].pose == Pose{1, 1, Dir::e});
    CHECK(is_initial_state(single[0], pe));

    ModelParams pconn = legacy_params(5, 2);
    pconn.init = InitialConstraint::connected();
    for (const SwarmState &s : initial_states(pconn))
        CHECK(all_connected(s, pconn));
}

TEST_CASE("parameter validation") {
    ModelParams p = legacy_params(4, 2);
    p.alpha = 2;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = legacy_params(1, 2);
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = counting_params(4, 3, Mode::sync);
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = legacy_params(4, 3);
    p.range = 4;
    CHECK(!p.validate().empty()); // flagged, not rejected
}
