#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brd/dynamics.hpp"
#include "brd/population.hpp"

namespace brd {

// Wandering types where the cumulative membership inequalities hold with
// equality; these are the states one unit away from leaving the set.
struct TightIndexSets {
    std::vector<int> upper_tight;  // upper condition met exactly
    std::vector<int> lower_tight;  // lower condition met exactly
};

// Threshold markers of a member state. Every marker lives in the wandering
// anticoordinating range (p, q); empty scans collapse to the range edges
// (max of nothing = p, min of nothing = q).
struct StateMarkers {
    int max_slack = 0;    // largest wandering type not fully playing A
    int min_loaded = 0;   // smallest wandering type with an A-player
    int wander_a = 0;     // A-players across wandering anticoordinating types
    int wander_n = 0;     // agents across wandering anticoordinating types
    int join_max_up = 0;     // largest type whose B-players still join A with one extra A-player
    int quit_min_up = 0;     // smallest loaded type whose A-players quit with one extra A-player
    int join_max_down = 0;   // largest type whose B-players still join A with one fewer A-player
    int quit_min_down = 0;   // smallest loaded type whose A-players quit with one fewer A-player
};

struct ClauseStat {
    std::string clause;
    long long applicable = 0;
    long long passed = 0;
};

struct StabilityVerdict {
    bool stable = true;
    std::string method;
    std::optional<std::string> failing_condition;
    std::optional<State> witness_state;
    std::optional<std::string> witness_perturbation;
    std::vector<ClauseStat> clause_stats;
};

// L1 distance from x to the closest of members (members must be nonempty).
int set_distance(const State& x, const std::vector<State>& members);

// Formula evaluation without the membership precondition; used internally
// and by the checks below. Callers outside the module normally want
// lr_index_sets / markers, which validate membership first.
TightIndexSets tight_index_scan(const PopulationSpec& spec, const BenchmarkQuad& bm,
                                const State& z);
StateMarkers marker_scan(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& z);

TightIndexSets lr_index_sets(const PopulationSpec& spec, const BenchmarkQuad& bm,
                             const State& z);
StateMarkers markers(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& z);

// Necessary-and-sufficient member-state conditions, checked in their listed
// order with a first-violation witness. Requires the integer parts of the
// anticoordinator tempers to be strictly descending.
StabilityVerdict check_proposition(const PopulationSpec& spec, const BenchmarkQuad& bm,
                                   const std::vector<State>& members);

// Two-clause form, valid when the set has at least one A-fixed and one
// B-fixed type (p + p' >= 1 and q + q' <= b + b' + 1). Throws
// AnalyticsUnsupported otherwise, directing the caller to check_proposition.
StabilityVerdict check_theorem(const PopulationSpec& spec, const BenchmarkQuad& bm,
                               const std::vector<State>& members);

bool theorem_guards_hold(const PopulationSpec& spec, const BenchmarkQuad& bm);

// A-count window of the two-clause form: [lo, hi].
std::pair<long long, long long> theorem_a_window(const PopulationSpec& spec,
                                                 const BenchmarkQuad& bm);

// Definition oracle: enumerates every state at distance one and every valid
// activation, and demands the step stays within distance one. Works for any
// positively invariant member list, not only benchmark-shaped sets.
StabilityVerdict verify_one_step(const PopulationSpec& spec, const std::vector<State>& members,
                                 std::uint64_t cap = 10000000);

}  // namespace brd
