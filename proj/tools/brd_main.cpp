#include "CLI11.hpp"

#include "brd/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"best-response dynamics in mixed coordinator/anticoordinator populations"};
    app.require_subcommand(1);

    brd::RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub, bool needs_spec = true) {
        sub->add_option("--spec", cfg.spec_path, "population spec JSON")->required(needs_spec);
        sub->add_option("--out", cfg.out_dir, "output directory (default .)");
    };

    auto* validate = app.add_subcommand("validate", "check a population file");
    add_common(validate);

    auto* simulate = app.add_subcommand("simulate", "seeded random-activation trajectory");
    add_common(simulate);
    simulate->add_option("--seed", cfg.seed, "random seed");
    simulate->add_option("--steps", cfg.steps, "number of activations");
    simulate->add_option("--init", cfg.init, "initial state literal x1,..|x'b',..,x'1");

    auto* replay = app.add_subcommand("replay", "trajectory from an activation log");
    add_common(replay);
    replay->add_option("--init", cfg.init, "initial state literal");
    replay->add_option("--log", cfg.log_path, "activation log CSV")->required();

    auto* characterize = app.add_subcommand("characterize", "construct candidate invariant sets");
    add_common(characterize);
    characterize->add_option("--cap-members", cfg.cap_members, "enumeration cap");

    auto* stability = app.add_subcommand("stability", "decide stability of each candidate set");
    add_common(stability);
    stability->add_option("--method", cfg.method, "theorem|proposition|onestep");
    stability->add_option("--cap-members", cfg.cap_members, "enumeration cap");
    stability->add_option("--cap-states", cfg.cap_states, "one-step neighborhood cap");

    auto* sync = app.add_subcommand("sync", "synchronous-update analysis");
    add_common(sync);
    sync->add_flag("--beta-all", cfg.beta_all, "also iterate the full state map exhaustively");
    sync->add_option("--cap-states", cfg.cap_states, "state-space cap");

    auto* oracle = app.add_subcommand("oracle", "exhaustive transition-graph ground truth");
    add_common(oracle);
    oracle->add_option("--cap-states", cfg.cap_states, "state-space cap");
    oracle->add_option("--cap-members", cfg.cap_members, "enumeration cap for cross-check");
    oracle->add_flag("--dump-graph", cfg.dump_graph, "write binary adjacency dump");

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();
    return brd::run(cfg);
}
