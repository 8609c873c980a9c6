#pragma once

#include <cstdint>
#include <vector>

#include "brd/population.hpp"

namespace brd {

// Names a class of interchangeable agents: role + type + current strategy.
struct Activation {
    Role role = Role::Anticoordinator;
    int type = 1;  // 1-based type index within the role
    Strategy current = Strategy::B;

    bool operator==(const Activation& o) const {
        return role == o.role && type == o.type && current == o.current;
    }
};

struct Trajectory {
    std::vector<State> states;
    std::vector<Activation> activations;  // size = states.size() - 1
    std::vector<int> a_counts;            // a_counts[t] = total_a(states[t])
};

// Result of one activation sweep: the final state plus the running A-total
// recorded right after each swept type's block, keyed by type index.
struct SweepResult {
    State final_state;
    std::vector<int> swept_types;   // in sweep order
    std::vector<int> stage_a;       // parallel to swept_types
    int a_after_type(int type) const;
};

// Best-response tendency of one agent of the named class at state x.
bool agent_tends_to_a(const PopulationSpec& spec, const State& x, const Activation& who);

// True when the named class currently holds at least one agent.
bool activation_valid(const PopulationSpec& spec, const State& x, const Activation& who);

std::vector<Activation> valid_activations(const PopulationSpec& spec, const State& x);

// One asynchronous update. Throws InvalidActivation if no such agent exists.
State step(const PopulationSpec& spec, const State& x, const Activation& who);

// Folds step over a sequence, recording every intermediate state.
Trajectory replay(const PopulationSpec& spec, const State& x0,
                  const std::vector<Activation>& seq);

// Activation sweeps. Every agent of the listed types updates exactly once;
// the A-total is re-evaluated after every single-agent update. Within one
// type, currently A-playing agents update before B-playing agents.
SweepResult sweep_coor_rl(const PopulationSpec& spec, const State& y);  // types 1..b'
SweepResult sweep_coor_lr(const PopulationSpec& spec, const State& y);  // types b'..1
SweepResult sweep_anti_rl(const PopulationSpec& spec, const State& y);  // types b..1
// Types i, i+1, .., b in that order; 1 <= i <= b.
SweepResult sweep_anti_lr_from(const PopulationSpec& spec, const State& y, int i);

// Expands a sweep into its explicit single-agent activation sequence against
// the given start state; replaying it must reproduce the sweep.
std::vector<Activation> sweep_sequence_coor_rl(const PopulationSpec& spec, State y);
std::vector<Activation> sweep_sequence_coor_lr(const PopulationSpec& spec, State y);
std::vector<Activation> sweep_sequence_anti_rl(const PopulationSpec& spec, State y);
std::vector<Activation> sweep_sequence_anti_lr_from(const PopulationSpec& spec, State y, int i);

// Counter-based generator: draw t is a pure function of (seed, t), so a seed
// fully determines a run and any draw can be audited in isolation.
std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t counter);

// Uniform draw over the currently valid activations.
Activation random_activation(const PopulationSpec& spec, const State& x,
                             std::uint64_t seed, std::uint64_t t);

Trajectory simulate(const PopulationSpec& spec, const State& x0, int steps,
                    std::uint64_t seed);

}  // namespace brd
