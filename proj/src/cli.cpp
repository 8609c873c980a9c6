#include "brd/cli.hpp"

#include <filesystem>
#include <iostream>
#include <unordered_set>

#include "brd/errors.hpp"
#include "brd/io.hpp"

namespace brd {

namespace {

namespace fs = std::filesystem;

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (fs::path(cfg.out_dir) / name).string();
}

PopulationSpec load_valid_spec(const RunConfig& cfg) {
    PopulationSpec spec = load_spec_json(cfg.spec_path);
    const ValidationReport rep = validate_spec(spec);
    if (!rep.ok) {
        std::string msg = "population file fails validation:";
        for (const auto& v : rep.violations) msg += "\n  - " + v;
        throw ValidationError(msg);
    }
    return spec;
}

State initial_state(const RunConfig& cfg, const PopulationSpec& spec) {
    if (cfg.init.empty()) return all_b_state(spec);
    return parse_state(spec, cfg.init);
}

int cmd_validate(const RunConfig& cfg) {
    const PopulationSpec spec = load_spec_json(cfg.spec_path);
    const ValidationReport rep = validate_spec(spec);
    const Json j = validation_report_json(rep);
    write_text_file(out_path(cfg, "validate.json"), j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return rep.ok ? kExitOk : kExitValidation;
}

int cmd_simulate(const RunConfig& cfg) {
    const PopulationSpec spec = load_valid_spec(cfg);
    const State x0 = initial_state(cfg, spec);
    const Trajectory tr = simulate(spec, x0, cfg.steps, cfg.seed);
    write_trajectory_csv(spec, tr, out_path(cfg, "trajectory.csv"));
    write_activation_csv(tr, out_path(cfg, "activations.csv"));
    int lo = tr.a_counts.front(), hi = lo;
    for (int a : tr.a_counts) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    Json j;
    j["command"] = "simulate";
    j["steps"] = cfg.steps;
    j["seed"] = cfg.seed;
    j["initial_state"] = format_state(x0);
    j["final_state"] = format_state(tr.states.back());
    j["a_range"] = {lo, hi};
    j["files"] = {out_path(cfg, "trajectory.csv"), out_path(cfg, "activations.csv")};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_replay(const RunConfig& cfg) {
    const PopulationSpec spec = load_valid_spec(cfg);
    if (cfg.log_path.empty()) throw ValidationError("replay needs --log <activation csv>");
    const State x0 = initial_state(cfg, spec);
    const Trajectory tr = replay(spec, x0, read_activation_csv(cfg.log_path));
    write_trajectory_csv(spec, tr, out_path(cfg, "trajectory.csv"));
    Json j;
    j["command"] = "replay";
    j["length"] = tr.states.size();
    j["final_state"] = format_state(tr.states.back());
    j["files"] = {out_path(cfg, "trajectory.csv")};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

std::string quad_tag(const BenchmarkQuad& q) {
    return std::to_string(q.p) + "_" + std::to_string(q.q) + "_" + std::to_string(q.q_c) + "_" +
           std::to_string(q.p_c);
}

int cmd_characterize(const RunConfig& cfg) {
    const PopulationSpec spec = load_valid_spec(cfg);
    const auto candidates = characterize(spec, cfg.cap_members);
    Json j = characterization_json(spec, candidates);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (!candidates[k].members) continue;
        const std::string file = out_path(cfg, "members_" + quad_tag(candidates[k].quad) + ".csv");
        write_members_csv(spec, *candidates[k].members, file);
        j["candidates"][k]["member_file"] = file;
    }
    write_text_file(out_path(cfg, "characterize.json"), j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_stability(const RunConfig& cfg) {
    const PopulationSpec spec = load_valid_spec(cfg);
    const auto candidates = characterize(spec, cfg.cap_members);
    Json report;
    report["method_requested"] = cfg.method;
    report["sets"] = Json::array();
    for (const auto& cand : candidates) {
        Json js;
        js["benchmarks"] = {{"p", cand.quad.p},
                            {"q", cand.quad.q},
                            {"q_c", cand.quad.q_c},
                            {"p_c", cand.quad.p_c}};
        if (!cand.members) {
            js["verdict"] = nullptr;
            js["note"] = "member enumeration above cap; stability not evaluated";
            report["sets"].push_back(js);
            continue;
        }
        StabilityVerdict v;
        if (cfg.method == "onestep") {
            v = verify_one_step(spec, *cand.members, cfg.cap_states);
        } else if (cfg.method == "theorem") {
            if (theorem_guards_hold(spec, cand.quad)) {
                v = check_theorem(spec, cand.quad, *cand.members);
            } else {
                v = check_proposition(spec, cand.quad, *cand.members);
                js["note"] = "theorem guards absent; fell back to the full condition list";
            }
        } else if (cfg.method == "proposition") {
            v = check_proposition(spec, cand.quad, *cand.members);
        } else {
            throw ValidationError("unknown stability method: " + cfg.method);
        }
        js["verdict"] = verdict_json(v);
        report["sets"].push_back(js);
    }
    write_text_file(out_path(cfg, "stability.json"), report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int cmd_sync(const RunConfig& cfg) {
    const PopulationSpec spec = load_valid_spec(cfg);
    const CountProfile profile = count_profile(spec);
    write_count_profile_csv(profile, out_path(cfg, "fprofile.csv"));
    const CountCycleReport cycles = find_count_cycles(spec);
    Json j = count_cycles_json(cycles);
    write_text_file(out_path(cfg, "cycles.json"), j.dump(2) + "\n");
    if (cfg.beta_all) {
        const StateCycleReport full = find_state_cycles_all(spec, cfg.cap_states);
        const Json jb = state_cycles_json(spec, full);
        write_text_file(out_path(cfg, "state_cycles.json"), jb.dump(2) + "\n");
        j["state_cycles_file"] = out_path(cfg, "state_cycles.json");
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
    const PopulationSpec spec = load_valid_spec(cfg);
    const TransitionGraph graph = build_transition_graph(spec, cfg.cap_states);
    MinimalSetReport rep = minimal_invariant_sets(spec, graph);
    if (cfg.dump_graph)
        write_graph_dump(graph, out_path(cfg, "graph.bin"), out_path(cfg, "graph.json"));

    Json j;
    j["nodes"] = graph.num_nodes();
    j["edges"] = graph.num_edges();

    bool mismatch = false;
    Json cross;
    if (spec.constants.empty()) {
        const auto candidates = characterize(spec, cfg.cap_members);
        cross["candidates"] = Json::array();
        std::vector<std::unordered_set<State, StateHash>> member_sets;
        for (const auto& cand : candidates) {
            Json jc;
            jc["benchmarks"] = {{"p", cand.quad.p},
                                {"q", cand.quad.q},
                                {"q_c", cand.quad.q_c},
                                {"p_c", cand.quad.p_c}};
            if (!cand.members) {
                jc["closed"] = nullptr;
                jc["note"] = "enumeration above cap";
                member_sets.emplace_back();
                cross["candidates"].push_back(jc);
                continue;
            }
            const ClosureCheck closure = is_invariant(spec, *cand.members);
            jc["closed"] = closure.closed;
            if (!closure.closed) {
                mismatch = true;
                jc["escape_from"] = format_state(*closure.escape_from);
                jc["escape_to"] = format_state(*closure.escape_to);
            }
            member_sets.emplace_back(cand.members->begin(), cand.members->end());
            cross["candidates"].push_back(jc);
        }
        // Each enumerable candidate must contain a terminal class; terminal
        // classes outside every candidate are flagged but not fatal.
        for (std::size_t k = 0; k < rep.sets.size(); ++k) {
            for (std::size_t c = 0; c < member_sets.size(); ++c) {
                if (member_sets[c].empty()) continue;
                bool subset = true;
                for (const State& x : rep.sets[k])
                    if (!member_sets[c].count(x)) {
                        subset = false;
                        break;
                    }
                if (subset) {
                    rep.matched_candidate[k] = (int)c;
                    break;
                }
            }
        }
        for (std::size_t c = 0; c < member_sets.size(); ++c) {
            if (!candidates[c].members) continue;
            bool contains_terminal = false;
            for (std::size_t k = 0; k < rep.sets.size(); ++k)
                if (rep.matched_candidate[k] && *rep.matched_candidate[k] == (int)c)
                    contains_terminal = true;
            cross["candidates"][c]["contains_terminal_class"] = contains_terminal;
            if (!contains_terminal) mismatch = true;
        }
        Json unmatched = Json::array();
        for (std::size_t k = 0; k < rep.sets.size(); ++k)
            if (!rep.matched_candidate[k]) unmatched.push_back((int)k);
        cross["unmatched_terminal_classes"] = unmatched;
        cross["ok"] = !mismatch;
    } else {
        cross["note"] = "constant classes present; analytic cross-check skipped";
        cross["ok"] = true;
    }

    j["minimal_sets"] = minimal_sets_json(rep);
    j["cross_check"] = cross;
    write_text_file(out_path(cfg, "oracle.json"), j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return mismatch ? kExitCrossCheckMismatch : kExitOk;
}

}  // namespace

int run(const RunConfig& cfg) {
    try {
        fs::create_directories(cfg.out_dir);
        if (cfg.command == "validate") return cmd_validate(cfg);
        if (cfg.command == "simulate") return cmd_simulate(cfg);
        if (cfg.command == "replay") return cmd_replay(cfg);
        if (cfg.command == "characterize") return cmd_characterize(cfg);
        if (cfg.command == "stability") return cmd_stability(cfg);
        if (cfg.command == "sync") return cmd_sync(cfg);
        if (cfg.command == "oracle") return cmd_oracle(cfg);
        std::cout << error_json("usage", "unknown command: " + cfg.command).dump(2) << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cout << error_json("validation", e.what()).dump(2) << "\n";
        return kExitValidation;
    } catch (const AnalyticsUnsupported& e) {
        std::cout << error_json("unsupported", e.what()).dump(2) << "\n";
        return kExitValidation;
    } catch (const CapExceeded& e) {
        std::cout << error_json("cap", e.what()).dump(2) << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cout << error_json("internal", e.what()).dump(2) << "\n";
        return kExitInternal;
    }
}

}  // namespace brd
