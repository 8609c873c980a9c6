#include "brd/dynamics.hpp"

#include <string>

#include "brd/errors.hpp"

namespace brd {

int SweepResult::a_after_type(int type) const {
    for (std::size_t k = 0; k < swept_types.size(); ++k)
        if (swept_types[k] == type) return stage_a[k];
    throw std::out_of_range("type " + std::to_string(type) + " was not swept");
}

bool agent_tends_to_a(const PopulationSpec& spec, const State& x, const Activation& who) {
    if (!activation_valid(spec, x, who))
        throw InvalidActivation("no agent of class (" + std::string(to_string(who.role)) +
                                ", type " + std::to_string(who.type) + ", playing " +
                                to_string(who.current) + ") at this state");
    const Rational a(total_a(spec, x));
    switch (who.role) {
        case Role::Anticoordinator: {
            const Rational tau = spec.anti_temper(who.type);
            return who.current == Strategy::A ? a <= tau + Rational(1) : a <= tau;
        }
        case Role::Coordinator: {
            const Rational tau = spec.coor_temper(who.type);
            return who.current == Strategy::A ? a >= tau + Rational(1) : a >= tau;
        }
        case Role::Constant:
            return spec.constants[who.type - 1].strategy == Strategy::A;
    }
    return false;
}

bool activation_valid(const PopulationSpec& spec, const State& x, const Activation& who) {
    switch (who.role) {
        case Role::Anticoordinator: {
            if (who.type < 1 || who.type > spec.num_anti_types()) return false;
            const int cur = x.anti[who.type - 1];
            return who.current == Strategy::A ? cur > 0 : cur < spec.anti_count(who.type);
        }
        case Role::Coordinator: {
            if (who.type < 1 || who.type > spec.num_coor_types()) return false;
            const int cur = x.coor[who.type - 1];
            return who.current == Strategy::A ? cur > 0 : cur < spec.coor_count(who.type);
        }
        case Role::Constant:
            return who.type >= 1 && who.type <= (int)spec.constants.size() &&
                   spec.constants[who.type - 1].strategy == who.current;
    }
    return false;
}

std::vector<Activation> valid_activations(const PopulationSpec& spec, const State& x) {
    std::vector<Activation> out;
    for (int i = 1; i <= spec.num_anti_types(); ++i) {
        if (x.anti[i - 1] > 0) out.push_back({Role::Anticoordinator, i, Strategy::A});
        if (x.anti[i - 1] < spec.anti_count(i))
            out.push_back({Role::Anticoordinator, i, Strategy::B});
    }
    for (int j = 1; j <= spec.num_coor_types(); ++j) {
        if (x.coor[j - 1] > 0) out.push_back({Role::Coordinator, j, Strategy::A});
        if (x.coor[j - 1] < spec.coor_count(j))
            out.push_back({Role::Coordinator, j, Strategy::B});
    }
    for (int k = 1; k <= (int)spec.constants.size(); ++k)
        out.push_back({Role::Constant, k, spec.constants[k - 1].strategy});
    return out;
}

State step(const PopulationSpec& spec, const State& x, const Activation& who) {
    const bool wants_a = agent_tends_to_a(spec, x, who);  // validates
    State next = x;
    if (who.role == Role::Constant) return next;
    if (wants_a == (who.current == Strategy::A)) return next;
    int delta = wants_a ? 1 : -1;
    if (who.role == Role::Anticoordinator)
        next.anti[who.type - 1] += delta;
    else
        next.coor[who.type - 1] += delta;
    return next;
}

Trajectory replay(const PopulationSpec& spec, const State& x0,
                  const std::vector<Activation>& seq) {
    Trajectory tr;
    tr.states.push_back(x0);
    tr.a_counts.push_back(total_a(spec, x0));
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (!activation_valid(spec, tr.states.back(), seq[k]))
            throw InvalidActivation("invalid activation at sequence index " + std::to_string(k),
                                    (long)k);
        tr.states.push_back(step(spec, tr.states.back(), seq[k]));
        tr.activations.push_back(seq[k]);
        tr.a_counts.push_back(total_a(spec, tr.states.back()));
    }
    return tr;
}

namespace {

// Updates every agent of one type once (A-players first), mutating x.
void update_type_block(const PopulationSpec& spec, State& x, Role role, int type) {
    int* slot = role == Role::Anticoordinator ? &x.anti[type - 1] : &x.coor[type - 1];
    const int cap =
        role == Role::Anticoordinator ? spec.anti_count(type) : spec.coor_count(type);
    int a_players = *slot;
    int b_players = cap - *slot;
    for (int k = 0; k < a_players; ++k)
        if (!agent_tends_to_a(spec, x, {role, type, Strategy::A})) --*slot;
    for (int k = 0; k < b_players; ++k)
        if (agent_tends_to_a(spec, x, {role, type, Strategy::B})) ++*slot;
}

SweepResult run_sweep(const PopulationSpec& spec, State y, Role role,
                      const std::vector<int>& order) {
    SweepResult res;
    for (int type : order) {
        update_type_block(spec, y, role, type);
        res.swept_types.push_back(type);
        res.stage_a.push_back(total_a(spec, y));
    }
    res.final_state = std::move(y);
    return res;
}

std::vector<int> ascending(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

std::vector<int> descending(int hi, int lo) {
    std::vector<int> v;
    for (int i = hi; i >= lo; --i) v.push_back(i);
    return v;
}

std::vector<Activation> expand_sequence(const PopulationSpec& spec, State y, Role role,
                                        const std::vector<int>& order) {
    std::vector<Activation> seq;
    for (int type : order) {
        int* slot = role == Role::Anticoordinator ? &y.anti[type - 1] : &y.coor[type - 1];
        const int cap =
            role == Role::Anticoordinator ? spec.anti_count(type) : spec.coor_count(type);
        int a_players = *slot;
        int b_players = cap - *slot;
        for (int k = 0; k < a_players; ++k) {
            Activation act{role, type, Strategy::A};
            seq.push_back(act);
            y = step(spec, y, act);
            slot = role == Role::Anticoordinator ? &y.anti[type - 1] : &y.coor[type - 1];
        }
        for (int k = 0; k < b_players; ++k) {
            Activation act{role, type, Strategy::B};
            seq.push_back(act);
            y = step(spec, y, act);
            slot = role == Role::Anticoordinator ? &y.anti[type - 1] : &y.coor[type - 1];
        }
    }
    return seq;
}

}  // namespace

SweepResult sweep_coor_rl(const PopulationSpec& spec, const State& y) {
    return run_sweep(spec, y, Role::Coordinator, ascending(1, spec.num_coor_types()));
}

SweepResult sweep_coor_lr(const PopulationSpec& spec, const State& y) {
    return run_sweep(spec, y, Role::Coordinator, descending(spec.num_coor_types(), 1));
}

SweepResult sweep_anti_rl(const PopulationSpec& spec, const State& y) {
    return run_sweep(spec, y, Role::Anticoordinator, descending(spec.num_anti_types(), 1));
}

SweepResult sweep_anti_lr_from(const PopulationSpec& spec, const State& y, int i) {
    if (i < 1 || i > spec.num_anti_types())
        throw std::out_of_range("sweep start type " + std::to_string(i) + " out of range");
    return run_sweep(spec, y, Role::Anticoordinator, ascending(i, spec.num_anti_types()));
}

std::vector<Activation> sweep_sequence_coor_rl(const PopulationSpec& spec, State y) {
    return expand_sequence(spec, std::move(y), Role::Coordinator,
                           ascending(1, spec.num_coor_types()));
}

std::vector<Activation> sweep_sequence_coor_lr(const PopulationSpec& spec, State y) {
    return expand_sequence(spec, std::move(y), Role::Coordinator,
                           descending(spec.num_coor_types(), 1));
}

std::vector<Activation> sweep_sequence_anti_rl(const PopulationSpec& spec, State y) {
    return expand_sequence(spec, std::move(y), Role::Anticoordinator,
                           descending(spec.num_anti_types(), 1));
}

std::vector<Activation> sweep_sequence_anti_lr_from(const PopulationSpec& spec, State y, int i) {
    return expand_sequence(spec, std::move(y), Role::Anticoordinator,
                           ascending(i, spec.num_anti_types()));
}

std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t counter) {
    // splitmix64 over a seed-offset counter stream
    std::uint64_t z = seed + counter * 0x9e3779b97f4a7c15ull + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Activation random_activation(const PopulationSpec& spec, const State& x,
                             std::uint64_t seed, std::uint64_t t) {
    const auto acts = valid_activations(spec, x);
    const std::uint64_t r = counter_rng(seed, t);
    const std::uint64_t idx =
        (std::uint64_t)(((__uint128_t)r * acts.size()) >> 64);
    return acts[idx];
}

Trajectory simulate(const PopulationSpec& spec, const State& x0, int steps,
                    std::uint64_t seed) {
    Trajectory tr;
    tr.states.push_back(x0);
    tr.a_counts.push_back(total_a(spec, x0));
    for (int t = 0; t < steps; ++t) {
        const Activation act = random_activation(spec, tr.states.back(), seed, (std::uint64_t)t);
        tr.states.push_back(step(spec, tr.states.back(), act));
        tr.activations.push_back(act);
        tr.a_counts.push_back(total_a(spec, tr.states.back()));
    }
    return tr;
}

}  // namespace brd
