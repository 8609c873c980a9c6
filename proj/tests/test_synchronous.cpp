#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "brd/synchronous.hpp"
#include "fixtures.hpp"

using namespace brd;

TEST_CASE("sync_step fixes the all-coordinators-on state") {
    const auto spec = fixtures::mixed42();
    const State star = fixtures::st(spec, "0,0,0,0|15,1,10,2,3");
    CHECK(sync_step(spec, star) == star);
    CHECK(sync_step_total(spec, star) == star);
}

TEST_CASE("sync_step from the empty state turns every anticoordinator on") {
    const auto spec = fixtures::mixed42();
    const State zero = all_b_state(spec);
    const State next = sync_step(spec, zero);
    CHECK(next.anti == std::vector<int>{4, 3, 1, 3});
    CHECK(next.coor == std::vector<int>{0, 0, 0, 0, 0});  // every coordinator temper positive
}

TEST_CASE("sync_step keeps the boundary type unchanged at the equality branch") {
    const auto spec = fixtures::mixed42();
    // A-total 10 = floor(temper 9) + 1 for anticoordinating type 2, so that
    // coordinate carries over; type-2 coordinators flip (ceil(10) = 10).
    const State x = fixtures::st(spec, "4,2,1,0|0,0,0,0,3");
    const State next = sync_step(spec, x);
    CHECK(next.anti[1] == 2);
    CHECK(next.coor[1] == 2);
    const State y = fixtures::st(spec, "4,3,0,0|0,0,0,0,3");
    CHECK(sync_step(spec, y).anti[1] == 3);
}

TEST_CASE("count profile values at worked points") {
    const auto spec = fixtures::mixed42();
    const CountProfile p = count_profile(spec);
    REQUIRE(p.values.size() == 43);
    CHECK(p.values[31] == 31);
    CHECK(p.values[9] == 10);
    CHECK(p.values[10] == 9);
    CHECK(p.values[0] == 11);  // all anticoordinators, no coordinator at temper <= 0
    CHECK(p.coor_share[0] == 0);
    CHECK(p.anti_share[0] == 11);
    for (std::size_t a = 0; a < p.values.size(); ++a)
        CHECK(p.values[a] == p.coor_share[a] + p.anti_share[a]);
}

TEST_CASE("count-map cycles and their basins") {
    const auto spec = fixtures::mixed42();
    const CountCycleReport rep = find_count_cycles(spec);
    std::vector<std::vector<int>> cycles = rep.cycles;
    std::sort(cycles.begin(), cycles.end());
    CHECK(cycles == std::vector<std::vector<int>>{{9, 10}, {16, 19}, {31}});

    auto cycle_index = [&](const std::vector<int>& c) {
        for (std::size_t k = 0; k < rep.cycles.size(); ++k)
            if (rep.cycles[k] == c) return (int)k;
        return -1;
    };
    const int low = cycle_index({9, 10}), mid = cycle_index({16, 19}), fix = cycle_index({31});
    REQUIRE(low >= 0);
    REQUIRE(mid >= 0);
    REQUIRE(fix >= 0);

    std::set<int> basin_low, basin_mid, basin_fix;
    for (int a = 1; a <= 42; ++a) {
        if (rep.basin[a] == low) basin_low.insert(a);
        if (rep.basin[a] == mid) basin_mid.insert(a);
        if (rep.basin[a] == fix) basin_fix.insert(a);
    }
    std::set<int> expect_low{1, 2, 3, 4, 8, 9, 10, 11, 12, 13};
    std::set<int> expect_mid{5, 6, 7};
    for (int a = 14; a <= 24; ++a) expect_mid.insert(a);
    std::set<int> expect_fix;
    for (int a = 25; a <= 42; ++a) expect_fix.insert(a);
    CHECK(basin_low == expect_low);
    CHECK(basin_mid == expect_mid);
    CHECK(basin_fix == expect_fix);
    CHECK(rep.basin[0] == low);
}

TEST_CASE("a single always-on coordinator type maps everything to itself") {
    PopulationSpec spec;
    spec.anti = {{Role::Anticoordinator, Rational(0), 1}};
    spec.coor = {{Role::Coordinator, Rational(0), 5}};
    const CountProfile p = count_profile(spec);
    for (int a = 1; a <= spec.total_agents(); ++a) CHECK(p.values[a] == 5);
    const CountCycleReport rep = find_count_cycles(spec);
    bool found_five = false;
    for (const auto& c : rep.cycles)
        if (c == std::vector<int>{5}) found_five = true;
    CHECK(found_five);
}

TEST_CASE("exhaustive state-map iteration: projections and the unique fixed point") {
    const auto spec = fixtures::mixed42();
    const StateCycleReport rep = find_state_cycles_all(spec);

    std::set<std::vector<int>> projections;
    std::vector<State> fixed_points;
    for (std::size_t c = 0; c < rep.cycles.size(); ++c) {
        if (rep.cycles[c].size() == 1)
            fixed_points.push_back(rep.cycles[c][0]);
        else
            projections.insert(rep.a_projection[c]);
    }
    CHECK(projections ==
          std::set<std::vector<int>>{{9, 10, 12}, {16, 19, 20}});
    REQUIRE(fixed_points.size() == 1);
    CHECK(fixed_points[0] == fixtures::st(spec, "0,0,0,0|15,1,10,2,3"));

    std::uint64_t total = 0;
    for (std::uint64_t s : rep.basin_sizes) total += s;
    CHECK(total == 675840);
}

TEST_CASE("explicit-initial iteration lands in the expected cycles") {
    const auto spec = fixtures::mixed42();
    const State star = fixtures::st(spec, "0,0,0,0|15,1,10,2,3");
    const StateCycleReport rep =
        find_state_cycles(spec, {star, fixtures::st(spec, "4,0,0,0|0,0,0,2,3")});
    REQUIRE(rep.initial_cycle.size() == 2);
    CHECK(rep.cycles[rep.initial_cycle[0]].size() == 1);
    CHECK(rep.a_projection[rep.initial_cycle[1]] == std::vector<int>{9, 10, 12});
}

TEST_CASE("the simplified map factors through the A-total and matches the profile") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto spec = fixtures::random_small_spec(seed, false);
        const CountProfile profile = count_profile(spec);
        fixtures::Rng rng{seed * 41};
        for (int trial = 0; trial < 30; ++trial) {
            const State x = fixtures::random_state(spec, rng);
            const State y = fixtures::random_state(spec, rng);
            const State fx = sync_step_total(spec, x);
            CHECK(total_a(spec, fx) == profile.values[total_a(spec, x)]);
            if (total_a(spec, x) == total_a(spec, y))
                CHECK(fx == sync_step_total(spec, y));
        }
    }
}

TEST_CASE("every count orbit enters a cycle within n+1 steps") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto spec = fixtures::random_small_spec(seed, false);
        const CountProfile profile = count_profile(spec);
        const int n = spec.total_agents();
        for (int a0 = 0; a0 <= n; ++a0) {
            int slow = a0, fast = a0;
            bool met = false;
            for (int t = 0; t < n + 1; ++t) {
                slow = profile.values[slow];
                fast = profile.values[profile.values[fast]];
                if (slow == fast) {
                    met = true;
                    break;
                }
            }
            CHECK(met);
        }
    }
}
