#pragma once

#include <cstdint>
#include <vector>

#include "brd/population.hpp"

namespace brd {

constexpr std::uint64_t kDefaultStateSpaceCap = 10000000;

// Simultaneous best-response map: every agent updates at once, each against
// the pre-update A-total.
State sync_step(const PopulationSpec& spec, const State& x);

// Simplified map where agents read the population-wide A-total instead of
// the count of other A-players; its A-image depends on A(x) alone.
State sync_step_total(const PopulationSpec& spec, const State& x);

// values[a] = the A-total one sync_step_total application after any state
// with A-total a, split into the coordinator and anticoordinator shares.
struct CountProfile {
    std::vector<int> values;
    std::vector<int> coor_share;
    std::vector<int> anti_share;
};

CountProfile count_profile(const PopulationSpec& spec);

// Cycle structure of the scalar recursion on {0..n}.
struct CountCycleReport {
    std::vector<std::vector<int>> cycles;  // each rotated to start at its minimum
    std::vector<int> basin;                // basin[a] = index into cycles
};

CountCycleReport find_count_cycles(const PopulationSpec& spec);

struct StateCycleReport {
    std::vector<std::vector<State>> cycles;       // rotated to canonical minimum
    std::vector<std::vector<int>> a_projection;   // sorted distinct A-totals per cycle
    std::vector<std::uint64_t> basin_sizes;       // exhaustive runs only
    std::vector<int> initial_cycle;               // per requested initial state
};

// Iterates sync_step from the given initial states.
StateCycleReport find_state_cycles(const PopulationSpec& spec,
                                   const std::vector<State>& initials);

// Iterates sync_step from every state in the space (cap-guarded).
StateCycleReport find_state_cycles_all(const PopulationSpec& spec,
                                       std::uint64_t cap = kDefaultStateSpaceCap);

}  // namespace brd
