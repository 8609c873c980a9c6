#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "brd/dynamics.hpp"
#include "brd/population.hpp"
#include "brd/statespace.hpp"
#include "brd/synchronous.hpp"

namespace brd {

// Exhaustive nondeterministic successor relation: node -> the distinct states
// one activation away (self-loops kept). CSR layout over codec node ids.
struct TransitionGraph {
    StateCodec codec;
    std::vector<std::uint64_t> offsets;  // size() + 1 entries
    std::vector<std::uint32_t> edges;

    std::uint64_t num_nodes() const { return codec.size(); }
    std::uint64_t num_edges() const { return edges.size(); }
};

TransitionGraph build_transition_graph(const PopulationSpec& spec,
                                       std::uint64_t cap = kDefaultStateSpaceCap);

struct MinimalSetReport {
    std::vector<std::vector<State>> sets;  // canonical order inside and across sets
    std::vector<bool> is_equilibrium;      // singleton <=> equilibrium
    // Index of a characterized candidate equal to / containing the set, when
    // match_candidates has been applied.
    std::vector<std::optional<int>> matched_candidate;
};

// Terminal strongly connected components of the successor relation; these
// are exactly the minimal positively invariant sets.
MinimalSetReport minimal_invariant_sets(const PopulationSpec& spec,
                                        const TransitionGraph& graph);

struct ClosureCheck {
    bool closed = true;
    std::optional<State> escape_from;
    std::optional<Activation> escape_via;
    std::optional<State> escape_to;
};

// Is the member list closed under every single activation?
ClosureCheck is_invariant(const PopulationSpec& spec, const std::vector<State>& members);

// Forward-reachable set of x0 under all activation choices; the smallest
// positively invariant set containing x0's future. Canonically ordered.
std::vector<State> reach_closure(const PopulationSpec& spec, const State& x0,
                                 std::uint64_t cap = kDefaultStateSpaceCap);

}  // namespace brd
