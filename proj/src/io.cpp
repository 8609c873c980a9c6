#include "brd/io.hpp"

#include <fstream>
#include <sstream>

#include "brd/errors.hpp"

namespace brd {

namespace {

Rational rational_from_json(const Json& v, const char* what) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw ValidationError(std::string(what) +
                          " must be an integer or a rational string like \"19/2\"");
}

int count_from_json(const Json& entry) {
    if (!entry.contains("count") || !entry["count"].is_number_integer())
        throw ValidationError("every class entry needs an integer \"count\"");
    return entry["count"].get<int>();
}

}  // namespace

PopulationSpec parse_spec_json(const Json& doc) {
    if (!doc.is_object()) throw ValidationError("population file must be a JSON object");
    const Json anti = doc.value("anticoordinators", Json::array());
    const Json coor = doc.value("coordinators", Json::array());
    if (!anti.is_array() || !coor.is_array())
        throw ValidationError("\"anticoordinators\" and \"coordinators\" must be arrays");

    // Counts first: payoff-derived tempers need the population size.
    int n = 0;
    for (const Json& entry : anti) n += count_from_json(entry);
    for (const Json& entry : coor) n += count_from_json(entry);
    if (n < 2) throw ValidationError("population must contain at least two agents");

    PopulationSpec spec;
    auto add_entry = [&spec, n](const Json& entry, Role listed_role) {
        const int count = count_from_json(entry);
        if (entry.contains("payoffs")) {
            const Json& p = entry["payoffs"];
            if (!p.is_array() || p.size() != 4)
                throw ValidationError("\"payoffs\" must be a 4-element array [a,b,c,d]");
            PayoffMatrix m{rational_from_json(p[0], "payoff"), rational_from_json(p[1], "payoff"),
                           rational_from_json(p[2], "payoff"), rational_from_json(p[3], "payoff")};
            const ClassDescriptor d = derive_class(m, n);
            if (d.role == Role::Constant)
                spec.constants.push_back({d.locked, count});
            else if (d.role == Role::Anticoordinator)
                spec.anti.push_back({d.role, d.temper, count});
            else
                spec.coor.push_back({d.role, d.temper, count});
            return;
        }
        if (!entry.contains("temper"))
            throw ValidationError("class entry needs \"temper\" or \"payoffs\"");
        const Rational tau = rational_from_json(entry["temper"], "temper");
        if (listed_role == Role::Anticoordinator)
            spec.anti.push_back({Role::Anticoordinator, tau, count});
        else
            spec.coor.push_back({Role::Coordinator, tau, count});
    };
    for (const Json& entry : anti) add_entry(entry, Role::Anticoordinator);
    for (const Json& entry : coor) add_entry(entry, Role::Coordinator);
    return normalize_spec(std::move(spec));
}

PopulationSpec load_spec_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open population file: " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ValidationError("population file is not valid JSON: " + std::string(e.what()));
    }
    return parse_spec_json(doc);
}

Json validation_report_json(const ValidationReport& rep) {
    Json j;
    j["ok"] = rep.ok;
    j["violations"] = rep.violations;
    j["stability_assumption"] = rep.stability_assumption;
    j["has_constants"] = rep.has_constants;
    return j;
}

Json state_json(const State& x) { return format_state(x); }

namespace {

void write_header(std::ostream& os, const PopulationSpec& spec) {
    os << "t";
    for (int i = 1; i <= spec.num_anti_types(); ++i) os << ",x" << i;
    for (int j = spec.num_coor_types(); j >= 1; --j) os << ",xp" << j;
    os << ",A\n";
}

void write_row(std::ostream& os, const PopulationSpec& spec, long t, const State& x, int a) {
    os << t;
    for (int i = 1; i <= spec.num_anti_types(); ++i) os << "," << x.anti[i - 1];
    for (int j = spec.num_coor_types(); j >= 1; --j) os << "," << x.coor[j - 1];
    os << "," << a << "\n";
}

}  // namespace

void write_trajectory_csv(const PopulationSpec& spec, const Trajectory& tr,
                          const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot write " + path);
    write_header(os, spec);
    for (std::size_t t = 0; t < tr.states.size(); ++t)
        write_row(os, spec, (long)t, tr.states[t], tr.a_counts[t]);
}

void write_activation_csv(const Trajectory& tr, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot write " + path);
    os << "t,role,type,from,to\n";
    for (std::size_t t = 0; t < tr.activations.size(); ++t) {
        const Activation& act = tr.activations[t];
        const State& before = tr.states[t];
        const State& after = tr.states[t + 1];
        Strategy to = act.current;
        if (before != after) to = act.current == Strategy::A ? Strategy::B : Strategy::A;
        os << t << "," << to_string(act.role) << "," << act.type << ","
           << to_string(act.current) << "," << to_string(to) << "\n";
    }
}

std::vector<Activation> read_activation_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open activation log: " + path);
    std::vector<Activation> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("t,", 0) == 0) continue;  // header
        }
        std::istringstream is(line);
        std::string t, role, type, from, to;
        std::getline(is, t, ',');
        std::getline(is, role, ',');
        std::getline(is, type, ',');
        std::getline(is, from, ',');
        std::getline(is, to, ',');
        Activation act;
        if (role == "anticoordinator")
            act.role = Role::Anticoordinator;
        else if (role == "coordinator")
            act.role = Role::Coordinator;
        else if (role == "constant")
            act.role = Role::Constant;
        else
            throw ValidationError("unknown role in activation log: " + role);
        act.type = std::stoi(type);
        if (from != "A" && from != "B")
            throw ValidationError("unknown strategy in activation log: " + from);
        act.current = from == "A" ? Strategy::A : Strategy::B;
        out.push_back(act);
    }
    return out;
}

Json candidate_json(const PopulationSpec& spec, const CandidateSet& cand) {
    Json j;
    j["pair"] = {cand.r, cand.delta};
    Json pairs = Json::array();
    for (auto [r, d] : cand.generating_pairs) pairs.push_back({r, d});
    j["generating_pairs"] = pairs;
    j["benchmarks"] = {{"p", cand.quad.p},
                       {"q", cand.quad.q},
                       {"q_c", cand.quad.q_c},
                       {"p_c", cand.quad.p_c}};
    j["witness_states"] = {{"seed_low", format_state(cand.seed_low)},
                           {"seed_low_anti", format_state(cand.seed_low_anti)},
                           {"seed_low_full", format_state(cand.seed_low_full)},
                           {"seed_high", format_state(cand.seed_high)},
                           {"seed_high_anti", format_state(cand.seed_high_anti)},
                           {"seed_high_full", format_state(cand.seed_high_full)}};
    j["a_bounds"] = {cand.a_lo, cand.a_hi};
    if (cand.members) {
        j["member_count"] = cand.members->size();
    } else {
        j["member_count"] = nullptr;
        j["note"] = "enumeration skipped: wandering-range product above cap";
    }
    (void)spec;
    return j;
}

Json characterization_json(const PopulationSpec& spec,
                           const std::vector<CandidateSet>& candidates) {
    Json j;
    j["candidates"] = Json::array();
    for (const auto& cand : candidates) j["candidates"].push_back(candidate_json(spec, cand));
    return j;
}

void write_members_csv(const PopulationSpec& spec, const std::vector<State>& members,
                       const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot write " + path);
    write_header(os, spec);
    long t = 0;
    for (const State& x : members) write_row(os, spec, t++, x, total_a(spec, x));
}

Json verdict_json(const StabilityVerdict& v) {
    Json j;
    j["method"] = v.method;
    j["stable"] = v.stable;
    if (v.failing_condition) j["failing_condition"] = *v.failing_condition;
    if (v.witness_state) j["witness_state"] = format_state(*v.witness_state);
    if (v.witness_perturbation) j["witness_perturbation"] = *v.witness_perturbation;
    Json stats = Json::array();
    for (const auto& s : v.clause_stats)
        stats.push_back({{"clause", s.clause}, {"applicable", s.applicable}, {"passed", s.passed}});
    j["clause_stats"] = stats;
    return j;
}

void write_count_profile_csv(const CountProfile& profile, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot write " + path);
    os << "A,F_A,F_c,F_a\n";
    for (std::size_t a = 0; a < profile.values.size(); ++a)
        os << a << "," << profile.values[a] << "," << profile.coor_share[a] << ","
           << profile.anti_share[a] << "\n";
}

Json count_cycles_json(const CountCycleReport& rep) {
    Json j;
    j["cycles"] = Json::array();
    for (std::size_t c = 0; c < rep.cycles.size(); ++c) {
        Json jc;
        jc["values"] = rep.cycles[c];
        jc["fixed_point"] = rep.cycles[c].size() == 1;
        std::vector<int> basin;
        for (std::size_t a = 0; a < rep.basin.size(); ++a)
            if (rep.basin[a] == (int)c) basin.push_back((int)a);
        jc["basin"] = basin;
        j["cycles"].push_back(jc);
    }
    return j;
}

Json state_cycles_json(const PopulationSpec& spec, const StateCycleReport& rep) {
    Json j;
    j["cycles"] = Json::array();
    for (std::size_t c = 0; c < rep.cycles.size(); ++c) {
        Json jc;
        Json states = Json::array();
        for (const State& x : rep.cycles[c]) states.push_back(format_state(x));
        jc["states"] = states;
        jc["a_projection"] = rep.a_projection[c];
        jc["fixed_point"] = rep.cycles[c].size() == 1;
        if (!rep.basin_sizes.empty()) jc["basin_size"] = rep.basin_sizes[c];
        j["cycles"].push_back(jc);
    }
    (void)spec;
    return j;
}

Json minimal_sets_json(const MinimalSetReport& rep) {
    Json j;
    j["sets"] = Json::array();
    for (std::size_t k = 0; k < rep.sets.size(); ++k) {
        Json js;
        js["size"] = rep.sets[k].size();
        js["kind"] = rep.is_equilibrium[k] ? "equilibrium" : "oscillatory";
        Json states = Json::array();
        for (const State& x : rep.sets[k]) states.push_back(format_state(x));
        js["states"] = states;
        if (rep.matched_candidate[k])
            js["matched_candidate"] = *rep.matched_candidate[k];
        else
            js["matched_candidate"] = nullptr;
        j["sets"].push_back(js);
    }
    return j;
}

void write_graph_dump(const TransitionGraph& g, const std::string& bin_path,
                      const std::string& sidecar_path) {
    std::ofstream os(bin_path, std::ios::binary);
    if (!os) throw ValidationError("cannot write " + bin_path);
    const char magic[4] = {'B', 'R', 'D', 'G'};
    os.write(magic, 4);
    const std::uint64_t nodes = g.num_nodes(), edges = g.num_edges();
    os.write((const char*)&nodes, 8);
    os.write((const char*)&edges, 8);
    os.write((const char*)g.offsets.data(), (std::streamsize)(g.offsets.size() * 8));
    os.write((const char*)g.edges.data(), (std::streamsize)(g.edges.size() * 4));

    Json side;
    side["format"] = "BRDG v1: magic, u64 node count, u64 edge count, u64 offsets[n+1], u32 edges";
    side["byte_order"] = "little-endian";
    side["digit_order"] = "x_1..x_b then x'_b'..x'_1, last digit least significant";
    side["radices"] = g.codec.radices();
    write_text_file(sidecar_path, side.dump(2) + "\n");
}

Json error_json(const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot write " + path);
    os << content;
}

}  // namespace brd
