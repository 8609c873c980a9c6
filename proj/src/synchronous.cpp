#include "brd/synchronous.hpp"

#include <algorithm>
#include <unordered_map>

#include "brd/errors.hpp"
#include "brd/invariant.hpp"
#include "brd/statespace.hpp"

namespace brd {

State sync_step(const PopulationSpec& spec, const State& x) {
    require_analytic(spec);
    const Rational a(total_a(spec, x));
    State next = x;
    for (int i = 1; i <= spec.num_anti_types(); ++i) {
        const Rational tau = spec.anti_temper(i);
        if (a <= tau)
            next.anti[i - 1] = spec.anti_count(i);
        else if (a == Rational(tau.floor() + 1))
            next.anti[i - 1] = x.anti[i - 1];
        else
            next.anti[i - 1] = 0;
    }
    for (int j = 1; j <= spec.num_coor_types(); ++j) {
        const Rational tau = spec.coor_temper(j);
        if (a >= tau + Rational(1))
            next.coor[j - 1] = spec.coor_count(j);
        else if (a == Rational(tau.ceil()))
            next.coor[j - 1] = spec.coor_count(j) - x.coor[j - 1];
        else
            next.coor[j - 1] = 0;
    }
    return next;
}

State sync_step_total(const PopulationSpec& spec, const State& x) {
    require_analytic(spec);
    const Rational a(total_a(spec, x));
    State next = x;
    for (int i = 1; i <= spec.num_anti_types(); ++i)
        next.anti[i - 1] = a <= spec.anti_temper(i) ? spec.anti_count(i) : 0;
    for (int j = 1; j <= spec.num_coor_types(); ++j)
        next.coor[j - 1] = a >= spec.coor_temper(j) ? spec.coor_count(j) : 0;
    return next;
}

CountProfile count_profile(const PopulationSpec& spec) {
    require_analytic(spec);
    const int n = spec.total_agents();
    CountProfile p;
    p.values.resize(n + 1);
    p.coor_share.resize(n + 1);
    p.anti_share.resize(n + 1);
    for (int a = 0; a <= n; ++a) {
        int fc = 0, fa = 0;
        for (int j = 1; j <= spec.num_coor_types(); ++j)
            if (spec.coor_temper(j) <= Rational(a)) fc += spec.coor_count(j);
        for (int i = 1; i <= spec.num_anti_types(); ++i)
            if (spec.anti_temper(i) >= Rational(a)) fa += spec.anti_count(i);
        p.coor_share[a] = fc;
        p.anti_share[a] = fa;
        p.values[a] = fc + fa;
    }
    return p;
}

namespace {

// Cycle/basin decomposition of a functional graph. group[v] is -1 when
// unvisited and -2 while on the current walk.
template <typename Succ, typename Node>
void functional_cycles(std::uint64_t count, Succ succ, std::vector<int>& group,
                       std::vector<std::vector<Node>>& cycles) {
    group.assign(count, -1);
    std::vector<Node> path;
    for (std::uint64_t start = 0; start < count; ++start) {
        if (group[start] != -1) continue;
        path.clear();
        Node cur = (Node)start;
        while (group[cur] == -1) {
            group[cur] = -2;
            path.push_back(cur);
            cur = succ(cur);
        }
        int id;
        if (group[cur] == -2) {  // fresh cycle: path suffix from cur
            id = (int)cycles.size();
            cycles.emplace_back();
            std::size_t k = path.size();
            while (k > 0 && path[k - 1] != cur) --k;
            for (std::size_t i = k - 1; i < path.size(); ++i) cycles[id].push_back(path[i]);
        } else {
            id = group[cur];
        }
        for (Node v : path) group[v] = id;
    }
}

template <typename Node, typename Less>
void rotate_to_min(std::vector<Node>& cycle, Less less) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < cycle.size(); ++k)
        if (less(cycle[k], cycle[best])) best = k;
    std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
}

}  // namespace

CountCycleReport find_count_cycles(const PopulationSpec& spec) {
    const CountProfile profile = count_profile(spec);
    CountCycleReport rep;
    std::vector<std::vector<int>> cycles;
    functional_cycles<>((std::uint64_t)profile.values.size(),
                        [&](int a) { return profile.values[a]; }, rep.basin, cycles);
    for (auto& c : cycles) rotate_to_min(c, std::less<int>());
    rep.cycles = std::move(cycles);
    return rep;
}

StateCycleReport find_state_cycles(const PopulationSpec& spec,
                                   const std::vector<State>& initials) {
    require_analytic(spec);
    StateCycleReport rep;
    std::unordered_map<State, int, StateHash> cycle_of;  // states on known cycles
    for (const State& x0 : initials) {
        std::unordered_map<State, int, StateHash> seen_at;
        std::vector<State> orbit;
        State cur = x0;
        int found = -1;
        for (;;) {
            auto known = cycle_of.find(cur);
            if (known != cycle_of.end()) {
                found = known->second;
                break;
            }
            auto hit = seen_at.find(cur);
            if (hit != seen_at.end()) {
                std::vector<State> cycle(orbit.begin() + hit->second, orbit.end());
                rotate_to_min(cycle, canonical_less);
                found = (int)rep.cycles.size();
                for (const State& s : cycle) cycle_of.emplace(s, found);
                std::vector<int> proj;
                for (const State& s : cycle) proj.push_back(total_a(spec, s));
                std::sort(proj.begin(), proj.end());
                proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
                rep.cycles.push_back(std::move(cycle));
                rep.a_projection.push_back(std::move(proj));
                break;
            }
            seen_at.emplace(cur, (int)orbit.size());
            orbit.push_back(cur);
            cur = sync_step(spec, cur);
        }
        rep.initial_cycle.push_back(found);
    }
    return rep;
}

StateCycleReport find_state_cycles_all(const PopulationSpec& spec, std::uint64_t cap) {
    require_analytic(spec);
    const StateCodec codec = StateCodec::build(spec, cap);
    auto succ = [&](std::uint64_t id) { return codec.encode(sync_step(spec, codec.decode(id))); };

    StateCycleReport rep;
    std::vector<int> group;
    std::vector<std::vector<std::uint64_t>> raw_cycles;
    functional_cycles<decltype(succ), std::uint64_t>(codec.size(), succ, group, raw_cycles);

    rep.basin_sizes.assign(raw_cycles.size(), 0);
    for (std::uint64_t v = 0; v < codec.size(); ++v) ++rep.basin_sizes[group[v]];

    for (auto& rc : raw_cycles) {
        std::vector<State> cycle;
        for (std::uint64_t id : rc) cycle.push_back(codec.decode(id));
        rotate_to_min(cycle, canonical_less);
        std::vector<int> proj;
        for (const State& s : cycle) proj.push_back(total_a(spec, s));
        std::sort(proj.begin(), proj.end());
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        rep.cycles.push_back(std::move(cycle));
        rep.a_projection.push_back(std::move(proj));
    }
    return rep;
}

}  // namespace brd
