#include "brd/oracle.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "brd/errors.hpp"

namespace brd {

namespace {

// Integer thresholds equivalent to the rational tendency rules; A-totals are
// integers, so each comparison collapses to one floor/ceil bound.
struct Thresholds {
    std::vector<long long> anti_stay_max;  // A-player keeps A while A-total <= this
    std::vector<long long> anti_join_max;  // B-player joins A while A-total <= this
    std::vector<long long> coor_stay_min;  // A-player keeps A while A-total >= this
    std::vector<long long> coor_join_min;  // B-player joins A while A-total >= this

    explicit Thresholds(const PopulationSpec& spec) {
        for (int i = 1; i <= spec.num_anti_types(); ++i) {
            anti_stay_max.push_back(spec.anti_temper(i).floor() + 1);
            anti_join_max.push_back(spec.anti_temper(i).floor());
        }
        for (int j = 1; j <= spec.num_coor_types(); ++j) {
            coor_stay_min.push_back(spec.coor_temper(j).ceil() + 1);
            coor_join_min.push_back(spec.coor_temper(j).ceil());
        }
    }
};

}  // namespace

TransitionGraph build_transition_graph(const PopulationSpec& spec, std::uint64_t cap) {
    TransitionGraph g;
    g.codec = StateCodec::build(spec, cap);
    if (g.codec.size() > 0xffffffffull) throw CapExceeded("node ids exceed 32 bits");
    const Thresholds th(spec);
    const int b = spec.num_anti_types(), bc = spec.num_coor_types();

    g.offsets.assign(g.codec.size() + 1, 0);
    g.edges.reserve(g.codec.size() * 2);

    std::vector<std::uint32_t> scratch;
    for (std::uint64_t id = 0; id < g.codec.size(); ++id) {
        const State x = g.codec.decode(id);
        const long long a = total_a(spec, x);
        scratch.clear();
        bool self_loop = !spec.constants.empty();
        for (int i = 1; i <= b; ++i) {
            const std::uint64_t stride = g.codec.anti_stride(i);
            if (x.anti[i - 1] > 0) {
                if (a > th.anti_stay_max[i - 1])
                    scratch.push_back((std::uint32_t)(id - stride));
                else
                    self_loop = true;
            }
            if (x.anti[i - 1] < spec.anti_count(i)) {
                if (a <= th.anti_join_max[i - 1])
                    scratch.push_back((std::uint32_t)(id + stride));
                else
                    self_loop = true;
            }
        }
        for (int j = 1; j <= bc; ++j) {
            const std::uint64_t stride = g.codec.coor_stride(j);
            if (x.coor[j - 1] > 0) {
                if (a < th.coor_stay_min[j - 1])
                    scratch.push_back((std::uint32_t)(id - stride));
                else
                    self_loop = true;
            }
            if (x.coor[j - 1] < spec.coor_count(j)) {
                if (a >= th.coor_join_min[j - 1])
                    scratch.push_back((std::uint32_t)(id + stride));
                else
                    self_loop = true;
            }
        }
        if (self_loop) scratch.push_back((std::uint32_t)id);
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        for (std::uint32_t e : scratch) g.edges.push_back(e);
        g.offsets[id + 1] = g.edges.size();
    }
    return g;
}

MinimalSetReport minimal_invariant_sets(const PopulationSpec& spec,
                                        const TransitionGraph& graph) {
    (void)spec;
    const std::uint64_t n = graph.num_nodes();
    // Iterative Tarjan; the state space is far too deep for call recursion.
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> index(n, kUnset), lowlink(n), scc(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::uint32_t next_index = 0, next_scc = 0;

    struct Frame {
        std::uint32_t node;
        std::uint64_t edge;
    };
    std::vector<Frame> frames;

    for (std::uint64_t root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        frames.push_back({(std::uint32_t)root, graph.offsets[root]});
        index[root] = lowlink[root] = next_index++;
        stack.push_back((std::uint32_t)root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < graph.offsets[f.node + 1]) {
                const std::uint32_t child = graph.edges[f.edge++];
                if (index[child] == kUnset) {
                    index[child] = lowlink[child] = next_index++;
                    stack.push_back(child);
                    on_stack[child] = true;
                    frames.push_back({child, graph.offsets[child]});
                } else if (on_stack[child]) {
                    lowlink[f.node] = std::min(lowlink[f.node], index[child]);
                }
            } else {
                if (lowlink[f.node] == index[f.node]) {
                    for (;;) {
                        const std::uint32_t v = stack.back();
                        stack.pop_back();
                        on_stack[v] = false;
                        scc[v] = next_scc;
                        if (v == f.node) break;
                    }
                    ++next_scc;
                }
                const std::uint32_t done = f.node;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().node] =
                        std::min(lowlink[frames.back().node], lowlink[done]);
            }
        }
    }

    std::vector<bool> terminal(next_scc, true);
    for (std::uint64_t v = 0; v < n; ++v)
        for (std::uint64_t e = graph.offsets[v]; e < graph.offsets[v + 1]; ++e)
            if (scc[graph.edges[e]] != scc[v]) terminal[scc[v]] = false;

    MinimalSetReport rep;
    std::vector<int> set_of_scc(next_scc, -1);
    for (std::uint64_t v = 0; v < n; ++v) {
        if (!terminal[scc[v]]) continue;
        if (set_of_scc[scc[v]] == -1) {
            set_of_scc[scc[v]] = (int)rep.sets.size();
            rep.sets.emplace_back();
        }
        rep.sets[set_of_scc[scc[v]]].push_back(graph.codec.decode(v));
    }
    // Node id order is canonical order, so sets and their members already
    // come out sorted; normalize across sets by first member.
    std::sort(rep.sets.begin(), rep.sets.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.front(), b.front()); });
    for (const auto& s : rep.sets) rep.is_equilibrium.push_back(s.size() == 1);
    rep.matched_candidate.assign(rep.sets.size(), std::nullopt);
    return rep;
}

ClosureCheck is_invariant(const PopulationSpec& spec, const std::vector<State>& members) {
    if (members.empty()) throw ValidationError("closure check on an empty member list");
    std::unordered_set<State, StateHash> inside(members.begin(), members.end());
    ClosureCheck res;
    for (const State& x : members) {
        for (const Activation& act : valid_activations(spec, x)) {
            const State y = step(spec, x, act);
            if (!inside.count(y)) {
                res.closed = false;
                res.escape_from = x;
                res.escape_via = act;
                res.escape_to = y;
                return res;
            }
        }
    }
    return res;
}

std::vector<State> reach_closure(const PopulationSpec& spec, const State& x0,
                                 std::uint64_t cap) {
    std::unordered_set<State, StateHash> seen;
    std::queue<State> frontier;
    seen.insert(x0);
    frontier.push(x0);
    while (!frontier.empty()) {
        const State x = frontier.front();
        frontier.pop();
        for (const Activation& act : valid_activations(spec, x)) {
            State y = step(spec, x, act);
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw CapExceeded("forward closure exceeds cap");
                frontier.push(std::move(y));
            }
        }
    }
    std::vector<State> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace brd
