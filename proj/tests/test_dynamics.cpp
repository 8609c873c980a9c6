#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brd/dynamics.hpp"
#include "brd/errors.hpp"
#include "fixtures.hpp"

using namespace brd;

namespace {

Activation anti(int type, Strategy cur) { return {Role::Anticoordinator, type, cur}; }
Activation coor(int type, Strategy cur) { return {Role::Coordinator, type, cur}; }

// The cycle driven through 16 activations: types and the strategy the agent
// holds when activated (every listed activation switches).
const std::vector<Activation> kCycle16 = {
    anti(2, Strategy::B), coor(2, Strategy::B), anti(2, Strategy::A), coor(2, Strategy::A),
    anti(2, Strategy::B), coor(2, Strategy::B), coor(2, Strategy::B), anti(2, Strategy::A),
    anti(2, Strategy::A), anti(3, Strategy::A), coor(2, Strategy::A), coor(2, Strategy::A),
    anti(4, Strategy::B), anti(2, Strategy::B), anti(4, Strategy::A), anti(3, Strategy::B),
};

}  // namespace

TEST_CASE("tendency predicate at worked transitions") {
    const auto spec = fixtures::mixed42();
    const State x1 = fixtures::st(spec, "4,1,1,0|0,0,0,0,3");  // A-total 9
    CHECK(agent_tends_to_a(spec, x1, anti(2, Strategy::B)));   // 9 <= 9

    const State zero = all_b_state(spec);
    CHECK(!agent_tends_to_a(spec, zero, coor(2, Strategy::B)));  // 0 < temper

    const State x3 = fixtures::st(spec, "4,2,1,0|0,0,0,1,3");    // A-total 11
    CHECK(!agent_tends_to_a(spec, x3, anti(2, Strategy::A)));    // 11 > 9+1
}

TEST_CASE("step applies single switches and rejects absent agents") {
    const auto spec = fixtures::mixed42();
    const State x1 = fixtures::st(spec, "4,1,1,0|0,0,0,0,3");
    CHECK(step(spec, x1, anti(2, Strategy::B)) == fixtures::st(spec, "4,2,1,0|0,0,0,0,3"));

    // an agent already playing its best response leaves the state unchanged
    CHECK(step(spec, x1, anti(1, Strategy::A)) == x1);

    const State t2 = fixtures::st(spec, "4,0,0,0|0,0,10,2,3");
    CHECK(step(spec, t2, coor(4, Strategy::B)) == fixtures::st(spec, "4,0,0,0|0,1,10,2,3"));

    CHECK_THROWS_AS(step(spec, x1, anti(4, Strategy::A)), InvalidActivation);
}

TEST_CASE("replay closes the 16-activation cycle with the recorded A-counts") {
    const auto spec = fixtures::mixed42();
    const State x1 = fixtures::st(spec, "4,1,1,0|0,0,0,0,3");
    const Trajectory tr = replay(spec, x1, kCycle16);
    REQUIRE(tr.states.size() == 17);
    CHECK(tr.a_counts == std::vector<int>{9, 10, 11, 10, 9, 10, 11, 12, 11, 10, 9, 8, 7, 8, 9, 8, 9});
    CHECK(tr.states[4] == x1);
    CHECK(tr.states[16] == x1);
    CHECK(tr.states[7] == fixtures::st(spec, "4,2,1,0|0,0,0,2,3"));
}

TEST_CASE("replay closes the 4-activation coordinator/anticoordinator cycle") {
    const auto spec = fixtures::mixed42();
    const State x0 = fixtures::st(spec, "4,0,0,0|0,0,10,2,3");
    const std::vector<Activation> seq = {coor(4, Strategy::B), anti(1, Strategy::A),
                                         coor(4, Strategy::A), anti(1, Strategy::B)};
    const Trajectory tr = replay(spec, x0, seq);
    CHECK(tr.a_counts == std::vector<int>{19, 20, 19, 18, 19});
    CHECK(tr.states[1] == fixtures::st(spec, "4,0,0,0|0,1,10,2,3"));
    CHECK(tr.states[4] == x0);
}

TEST_CASE("replay of the empty sequence and of an invalid activation") {
    const auto spec = fixtures::mixed42();
    const State x = all_b_state(spec);
    CHECK(replay(spec, x, {}).states.size() == 1);
    try {
        replay(spec, x, {anti(1, Strategy::B), anti(1, Strategy::A), anti(2, Strategy::A)});
        FAIL("expected InvalidActivation");
    } catch (const InvalidActivation& e) {
        CHECK(e.sequence_index == 2);  // nobody of type 2 plays A yet
    }
}

TEST_CASE("sweeps reproduce the worked construction states") {
    const auto spec = fixtures::mixed42();

    const State y11 = fixtures::st(spec, "4,0,0,0|0,0,0,0,3");
    const State y11_anti = sweep_anti_rl(spec, y11).final_state;
    CHECK(y11_anti == fixtures::st(spec, "4,1,1,1|0,0,0,0,3"));
    CHECK(sweep_coor_rl(spec, y11_anti).final_state == fixtures::st(spec, "4,1,1,1|0,0,0,2,3"));

    const State y10 = fixtures::st(spec, "4,0,0,0|0,0,0,0,0");
    const State y10_full = sweep_coor_rl(spec, sweep_anti_rl(spec, y10).final_state).final_state;
    CHECK(y10_full == fixtures::st(spec, "4,2,1,3|15,1,10,2,3"));
    CHECK(total_a(spec, y10_full) == 41);

    const State y03 = fixtures::st(spec, "0,0,0,0|0,0,10,2,3");
    const State y03_anti = sweep_anti_rl(spec, y03).final_state;
    CHECK(y03_anti.anti == std::vector<int>{4, 0, 0, 0});
    CHECK(sweep_coor_rl(spec, y03_anti).final_state == fixtures::st(spec, "4,0,0,0|0,1,10,2,3"));

    const State z11 = fixtures::st(spec, "4,3,1,3|0,0,0,2,3");
    const State z11_anti = sweep_anti_lr_from(spec, z11, 2).final_state;
    CHECK(z11_anti == fixtures::st(spec, "4,0,0,0|0,0,0,2,3"));
    CHECK(sweep_coor_lr(spec, z11_anti).final_state == fixtures::st(spec, "4,0,0,0|0,0,0,0,3"));

    const State z03 = fixtures::st(spec, "4,0,0,0|0,1,10,2,3");
    const State z03_anti = sweep_anti_lr_from(spec, z03, 1).final_state;
    CHECK(z03_anti.anti == std::vector<int>{3, 0, 0, 0});
    CHECK(sweep_coor_lr(spec, z03_anti).final_state == fixtures::st(spec, "3,0,0,0|0,0,10,2,3"));
}

TEST_CASE("sweep no-op edges") {
    const auto spec = fixtures::mixed42();
    // all coordinators off and the A-total below every coordinator temper
    const State low = fixtures::st(spec, "0,0,0,1|0,0,0,0,0");
    CHECK(sweep_coor_rl(spec, low).final_state.coor == low.coor);
    CHECK(sweep_coor_lr(spec, low).final_state.coor == low.coor);
    // type-b agents already at their best response
    const State settled = fixtures::st(spec, "4,3,1,0|15,1,10,2,3");
    CHECK(sweep_anti_lr_from(spec, settled, 4).final_state == settled);
    CHECK_THROWS(sweep_anti_lr_from(spec, settled, 5));
}

TEST_CASE("every sweep equals the replay of its expanded activation sequence") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto spec = fixtures::random_small_spec(seed, false);
        fixtures::Rng rng{seed * 31 + 7};
        for (int trial = 0; trial < 20; ++trial) {
            const State y = fixtures::random_state(spec, rng);
            CHECK(replay(spec, y, sweep_sequence_anti_rl(spec, y)).states.back() ==
                  sweep_anti_rl(spec, y).final_state);
            CHECK(replay(spec, y, sweep_sequence_coor_rl(spec, y)).states.back() ==
                  sweep_coor_rl(spec, y).final_state);
            CHECK(replay(spec, y, sweep_sequence_coor_lr(spec, y)).states.back() ==
                  sweep_coor_lr(spec, y).final_state);
            const int from = rng.range(1, spec.num_anti_types());
            CHECK(replay(spec, y, sweep_sequence_anti_lr_from(spec, y, from)).states.back() ==
                  sweep_anti_lr_from(spec, y, from).final_state);
        }
    }
}

TEST_CASE("coordinator part after a coordinator sweep is a full suffix block") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto spec = fixtures::random_small_spec(seed, false);
        fixtures::Rng rng{seed * 613 + 1};
        for (int trial = 0; trial < 20; ++trial) {
            const State y = fixtures::random_state(spec, rng);
            for (const State& done : {sweep_coor_rl(spec, y).final_state,
                                      sweep_coor_lr(spec, y).final_state}) {
                int j = 1;
                while (j <= spec.num_coor_types() && done.coor[j - 1] == spec.coor_count(j)) ++j;
                for (; j <= spec.num_coor_types(); ++j) CHECK(done.coor[j - 1] == 0);
            }
        }
    }
}

TEST_CASE("trajectories change A by at most one per step and keep counts consistent") {
    const auto spec = fixtures::mixed42();
    const Trajectory tr = simulate(spec, fixtures::st(spec, "4,3,0,0|0,0,0,0,3"), 400, 99);
    for (std::size_t t = 0; t < tr.states.size(); ++t) {
        CHECK(tr.a_counts[t] == total_a(spec, tr.states[t]));
        if (t > 0) CHECK(std::abs(tr.a_counts[t] - tr.a_counts[t - 1]) <= 1);
    }
}

TEST_CASE("simulate is reproducible per seed") {
    const auto spec = fixtures::mixed42();
    const State x0 = all_b_state(spec);
    const Trajectory a = simulate(spec, x0, 200, 7);
    const Trajectory b = simulate(spec, x0, 200, 7);
    const Trajectory c = simulate(spec, x0, 200, 8);
    CHECK(a.states == b.states);
    bool differs = a.states != c.states;
    CHECK(differs);
}

TEST_CASE("constant classes never switch but count toward the A-total") {
    PopulationSpec spec;
    spec.anti = {{Role::Anticoordinator, Rational(3), 2}};
    spec.coor = {{Role::Coordinator, Rational(2), 2}};
    spec.constants = {{Strategy::A, 3}, {Strategy::B, 1}};
    CHECK(spec.total_agents() == 8);
    const State x = all_b_state(spec);
    CHECK(total_a(spec, x) == 3);
    const Activation const_a{Role::Constant, 1, Strategy::A};
    CHECK(step(spec, x, const_a) == x);
    // coordinator joins because the locked A-players already meet its temper
    CHECK(agent_tends_to_a(spec, x, {Role::Coordinator, 1, Strategy::B}));
}
