#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "brd/dynamics.hpp"
#include "brd/invariant.hpp"
#include "brd/oracle.hpp"
#include "brd/population.hpp"
#include "brd/stability.hpp"
#include "brd/synchronous.hpp"

namespace brd {

using Json = nlohmann::ordered_json;

// Population file: {"anticoordinators": [...], "coordinators": [...]} where
// each entry carries "count" and either "temper" (integer or "p/q" string)
// or "payoffs" [a,b,c,d]. Payoff entries are classified by derive_class and
// land in the role it assigns, wherever they were listed.
PopulationSpec load_spec_json(const std::string& path);
PopulationSpec parse_spec_json(const Json& doc);

Json validation_report_json(const ValidationReport& rep);

Json state_json(const State& x);

void write_trajectory_csv(const PopulationSpec& spec, const Trajectory& tr,
                          const std::string& path);
void write_activation_csv(const Trajectory& tr, const std::string& path);
std::vector<Activation> read_activation_csv(const std::string& path);

Json candidate_json(const PopulationSpec& spec, const CandidateSet& cand);
Json characterization_json(const PopulationSpec& spec,
                           const std::vector<CandidateSet>& candidates);
void write_members_csv(const PopulationSpec& spec, const std::vector<State>& members,
                       const std::string& path);

Json verdict_json(const StabilityVerdict& v);

void write_count_profile_csv(const CountProfile& profile, const std::string& path);
Json count_cycles_json(const CountCycleReport& rep);
Json state_cycles_json(const PopulationSpec& spec, const StateCycleReport& rep);

Json minimal_sets_json(const MinimalSetReport& rep);

// Binary adjacency dump plus a JSON sidecar documenting the encoding.
void write_graph_dump(const TransitionGraph& g, const std::string& bin_path,
                      const std::string& sidecar_path);

Json error_json(const std::string& kind, const std::string& message);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace brd
