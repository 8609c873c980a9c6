#pragma once

#include <cstdint>
#include <string>

namespace brd {

// Batch front door. Every command reads --spec, writes files under --out and
// a summary JSON to stdout; the seed fully determines any randomness.
struct RunConfig {
    std::string command;  // validate|simulate|replay|characterize|stability|sync|oracle
    std::string spec_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int steps = 1000;
    std::string init;          // state literal "x1,..,xb|x'b',..,x'1"; empty = all-B
    std::string log_path;      // replay: activation log CSV
    std::uint64_t cap_states = 10000000;
    std::uint64_t cap_members = 1000000;
    std::string method = "proposition";  // stability: theorem|proposition|onestep
    bool beta_all = false;               // sync: also iterate the full state map
    bool dump_graph = false;             // oracle: write binary adjacency dump
};

int run(const RunConfig& config);

}  // namespace brd
