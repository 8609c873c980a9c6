#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "brd/dynamics.hpp"
#include "brd/population.hpp"

namespace brd {

constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

// An analytically constructed candidate set with its benchmarks, the six
// construction states, optional member enumeration, and A-player bounds.
struct CandidateSet {
    int r = 0;
    int delta = 0;
    std::vector<std::pair<int, int>> generating_pairs;  // all (r, delta) mapping here
    BenchmarkQuad quad;

    // Construction states, in build order: the all-B seed, the same after the
    // descending anticoordinator sweep, then after the ascending-temper
    // coordinator sweep; the all-A seed and its two sweep images.
    State seed_low, seed_low_anti, seed_low_full;
    State seed_high, seed_high_anti, seed_high_full;

    std::optional<std::vector<State>> members;  // canonical order, if under cap
    int a_lo = 0, a_hi = 0;
};

// Throws AnalyticsUnsupported when the spec contains constant classes.
void require_analytic(const PopulationSpec& spec);

// Acceptable second benchmarks for a fixed first benchmark r.
std::set<int> delta_set(const PopulationSpec& spec, int r);

// Seed state: anticoordinating prefix 1..r and coordinating prefix 1..delta
// saturated, everything else playing B.
State seed_state(const PopulationSpec& spec, int r, int delta);

// Pairs passing the sweep acceptance test, with no further filtering.
std::vector<std::pair<int, int>> acceptable_pairs(const PopulationSpec& spec);

// Acceptable pairs whose candidate set contains at least one state. Pairs
// that generate an empty set are dropped; see decide_nonempty.
std::vector<std::pair<int, int>> psi_set(const PopulationSpec& spec);

// Builds the candidate for an acceptable pair (no enumeration).
CandidateSet benchmarks(const PopulationSpec& spec, int r, int delta);

// Exact emptiness test for the set named by bm (no enumeration).
bool decide_nonempty(const PopulationSpec& spec, const BenchmarkQuad& bm);

// Cumulative-count conditions defining membership beyond the block pattern.
// upper: for wandering type i, A-fixed agents plus A-playing wandering
//        anticoordinators of type >= i stay within floor(temper_i) + 1.
// lower: A-fixed agents, the widest coordinator prefix, A-players up to i
//        and full types above i reach at least floor(temper_i) + 1.
long long upper_condition_sum(const PopulationSpec& spec, const BenchmarkQuad& bm,
                              const State& x, int i);
long long lower_condition_sum(const PopulationSpec& spec, const BenchmarkQuad& bm,
                              const State& x, int i);

bool membership(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& x);

// All members in canonical lexicographic order. Throws CapExceeded when the
// wandering-coordinate product exceeds cap.
std::vector<State> enumerate_set(const PopulationSpec& spec, const BenchmarkQuad& bm,
                                 std::uint64_t cap = kDefaultEnumerationCap);

// Bounds on the total number of A-players over the candidate set.
std::pair<int, int> a_bounds(const PopulationSpec& spec, const BenchmarkQuad& bm);

// Full characterization: candidates for every psi pair, deduplicated on the
// benchmark quad, enumerated when under cap, ordered by generating (r, delta).
std::vector<CandidateSet> characterize(const PopulationSpec& spec,
                                       std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace brd
