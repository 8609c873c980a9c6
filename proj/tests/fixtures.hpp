#pragma once

#include <cstdint>
#include <vector>

#include "brd/dynamics.hpp"
#include "brd/population.hpp"

namespace fixtures {

// 42-agent mixed population used across the suites: four anticoordinating
// types (tempers 18,9,8,7; counts 4,3,1,3) and five coordinating types
// (tempers 5,10,14,19,25 for types 1..5; counts 3,2,10,1,15).
inline brd::PopulationSpec mixed42() {
    using brd::AgentClass;
    using brd::Rational;
    using brd::Role;
    brd::PopulationSpec spec;
    spec.anti = {AgentClass{Role::Anticoordinator, Rational(18), 4},
                 AgentClass{Role::Anticoordinator, Rational(9), 3},
                 AgentClass{Role::Anticoordinator, Rational(8), 1},
                 AgentClass{Role::Anticoordinator, Rational(7), 3}};
    spec.coor = {AgentClass{Role::Coordinator, Rational(5), 3},
                 AgentClass{Role::Coordinator, Rational(10), 2},
                 AgentClass{Role::Coordinator, Rational(14), 10},
                 AgentClass{Role::Coordinator, Rational(19), 1},
                 AgentClass{Role::Coordinator, Rational(25), 15}};
    return spec;
}

inline brd::State st(const brd::PopulationSpec& spec, const std::string& literal) {
    return brd::parse_state(spec, literal);
}

// Deterministic cross-platform test randomness.
struct Rng {
    std::uint64_t seed;
    std::uint64_t counter = 0;
    std::uint64_t next() { return brd::counter_rng(seed, counter++); }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        return (std::uint64_t)(((__uint128_t)next() * bound) >> 64);
    }
    int range(int lo, int hi) { return lo + (int)below((std::uint64_t)(hi - lo + 1)); }
    bool coin() { return (next() & 1) != 0; }
};

// Random population with b, b' <= 4 and counts <= 5. With distinct_floors,
// anticoordinator temper integer parts are strictly descending (the
// stability modules require that).
inline brd::PopulationSpec random_small_spec(std::uint64_t seed, bool distinct_floors) {
    using brd::AgentClass;
    using brd::Rational;
    using brd::Role;
    Rng rng{seed};
    brd::PopulationSpec spec;
    const int b = rng.range(1, 4), bc = rng.range(1, 4);
    int n = 0;
    std::vector<int> anti_counts, coor_counts;
    for (int i = 0; i < b; ++i) {
        anti_counts.push_back(rng.range(1, 5));
        n += anti_counts.back();
    }
    for (int j = 0; j < bc; ++j) {
        coor_counts.push_back(rng.range(1, 5));
        n += coor_counts.back();
    }

    // Distinct descending anticoordinator tempers within [0, n-1].
    std::vector<Rational> anti_tempers;
    {
        int ceiling = n - 1;
        for (int i = 0; i < b; ++i) {
            const int slack = ceiling - (b - 1 - i);
            const int whole = rng.range(b - 1 - i, slack < b - 1 - i ? b - 1 - i : slack);
            Rational tau(whole);
            if (!distinct_floors && rng.coin() && whole + 1 <= n - 1)
                tau = Rational(2 * whole + 1, 2);  // x.5 keeps ordering strict
            else if (distinct_floors && rng.coin())
                tau = Rational(2 * whole + 1, 2) - Rational(1, 2);  // stay integral
            anti_tempers.push_back(tau);
            ceiling = whole - 1;
        }
    }
    // Distinct ascending coordinator tempers within [0, n-1].
    std::vector<Rational> coor_tempers;
    {
        int floor_next = 0;
        for (int j = 0; j < bc; ++j) {
            const int room = (n - 1) - floor_next - (bc - 1 - j);
            const int whole = floor_next + (room > 0 ? (int)rng.below((std::uint64_t)room + 1) : 0);
            Rational tau(whole);
            if (rng.coin() && whole + 1 <= n - 1) tau = Rational(2 * whole + 1, 2);
            coor_tempers.push_back(tau);
            floor_next = whole + 1;
        }
    }
    for (int i = 0; i < b; ++i)
        spec.anti.push_back(AgentClass{Role::Anticoordinator, anti_tempers[i], anti_counts[i]});
    for (int j = 0; j < bc; ++j)
        spec.coor.push_back(AgentClass{Role::Coordinator, coor_tempers[j], coor_counts[j]});
    return spec;
}

inline brd::State random_state(const brd::PopulationSpec& spec, Rng& rng) {
    brd::State x = brd::all_b_state(spec);
    for (int i = 1; i <= spec.num_anti_types(); ++i)
        x.anti[i - 1] = rng.range(0, spec.anti_count(i));
    for (int j = 1; j <= spec.num_coor_types(); ++j)
        x.coor[j - 1] = rng.range(0, spec.coor_count(j));
    return x;
}

}  // namespace fixtures
