#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brd/rational.hpp"

namespace brd {

enum class Strategy : std::uint8_t { A, B };

enum class Role : std::uint8_t {
    Anticoordinator,  // plays A only while few others do
    Coordinator,      // plays A only once enough others do
    Constant,         // locked to one strategy regardless of the population
};

const char* to_string(Strategy s);
const char* to_string(Role r);

struct PayoffMatrix {
    Rational a, b, c, d;
};

// One population type: all agents of one role sharing a temper.
struct AgentClass {
    Role role = Role::Anticoordinator;
    Rational temper;
    int count = 0;
};

// Agents whose payoffs make them play one strategy unconditionally. The
// simulation honors them; the set-characterization modules reject them.
struct ConstantClass {
    Strategy strategy = Strategy::B;
    int count = 0;
};

// derive_class result: role and temper, no count yet.
struct ClassDescriptor {
    Role role = Role::Anticoordinator;
    Rational temper;                       // meaningful for non-constant roles
    Strategy locked = Strategy::B;         // meaningful for Role::Constant
};

// Classifies a payoff matrix for a population of n agents. Total function:
// degenerate payoffs map to a constant-A coordinator (temper 0) or to a
// Constant(B) class.
ClassDescriptor derive_class(const PayoffMatrix& m, int n);

// A-player distribution: anti[i] is the count for anticoordinating type i+1,
// coor[j] for coordinating type j+1 (type 1 = lowest coordinator temper).
struct State {
    std::vector<int> anti;
    std::vector<int> coor;

    bool operator==(const State& o) const { return anti == o.anti && coor == o.coor; }
    bool operator!=(const State& o) const { return !(*this == o); }
};

// Population model. Anticoordinating types are ordered by strictly
// descending temper, coordinating types by strictly ascending temper.
// Type indices in the public API are 1-based to match that ordering;
// temper accessors accept the virtual sentinel indices 0 and size+1.
class PopulationSpec {
public:
    std::vector<AgentClass> anti;       // types 1..b, descending temper
    std::vector<AgentClass> coor;       // types 1..b', ascending temper
    std::vector<ConstantClass> constants;

    int num_anti_types() const { return (int)anti.size(); }
    int num_coor_types() const { return (int)coor.size(); }

    int total_agents() const;     // n
    int constant_a_count() const; // constants locked to A

    int anti_count(int i) const { return anti[i - 1].count; }
    int coor_count(int j) const { return coor[j - 1].count; }

    // Sentinels: anti_temper(0) = n, anti_temper(b+1) = -2,
    //            coor_temper(0) = -2, coor_temper(b'+1) = n+2.
    Rational anti_temper(int i) const;
    Rational coor_temper(int j) const;

    // Sum of counts for types 1..k (k = 0 gives 0).
    int anti_prefix(int k) const;
    int coor_prefix(int k) const;

    bool state_in_space(const State& x) const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    // Integer parts of anticoordinator tempers strictly descending; the
    // stability module requires this.
    bool stability_assumption = true;
    bool has_constants = false;
};

ValidationReport validate_spec(const PopulationSpec& spec);

// Merges same-role duplicate tempers (summing counts) without reordering;
// the type order is the caller's and validate_spec checks it.
PopulationSpec normalize_spec(PopulationSpec spec);

// Total number of A-players, including A-locked constant agents.
int total_a(const PopulationSpec& spec, const State& x);

// Benchmarks (p, q, q', p') naming fixed/wandering type ranges. The fields
// follow anticoordinating indices p < q and coordinating indices p_c < q_c.
struct BenchmarkQuad {
    int p = 0;    // anti types 1..p locked to A
    int q = 0;    // anti types q..b locked to B
    int q_c = 0;  // coor types q_c..b' locked to B
    int p_c = 0;  // coor types 1..p_c locked to A

    bool operator==(const BenchmarkQuad& o) const {
        return p == o.p && q == o.q && q_c == o.q_c && p_c == o.p_c;
    }
    bool operator<(const BenchmarkQuad& o) const;
    std::string str() const;
};

bool in_omega(const PopulationSpec& spec, const BenchmarkQuad& bm);

// Is x inside the block set named by bm (fixed blocks saturated/zeroed)?
bool state_in_block_set(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& x);

// The componentwise tightest quad whose block set contains x.
BenchmarkQuad tight_benchmarks(const PopulationSpec& spec, const State& x);

// Canonical order: (x_1..x_b, x'_b'..x'_1) compared lexicographically.
bool canonical_less(const State& a, const State& b);

// Canonical text form "x1,..,xb|x'b',..,x'1" (coordinators listed from the
// highest type down, matching the display convention).
std::string format_state(const State& x);
State parse_state(const PopulationSpec& spec, const std::string& text);

State all_b_state(const PopulationSpec& spec);

struct StateHash {
    std::size_t operator()(const State& x) const;
};

}  // namespace brd
