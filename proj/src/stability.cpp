#include "brd/stability.hpp"

#include <algorithm>
#include <unordered_set>

#include "brd/errors.hpp"
#include "brd/invariant.hpp"

namespace brd {

namespace {

int l1(const State& a, const State& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.anti.size(); ++i) d += std::abs(a.anti[i] - b.anti[i]);
    for (std::size_t j = 0; j < a.coor.size(); ++j) d += std::abs(a.coor[j] - b.coor[j]);
    return d;
}

// any element of v in (lo, hi]
bool hits_open_closed(const std::vector<int>& v, int lo, int hi) {
    for (int e : v)
        if (e > lo && e <= hi) return true;
    return false;
}

// any element of v in [lo, hi)
bool hits_closed_open(const std::vector<int>& v, int lo, int hi) {
    for (int e : v)
        if (e >= lo && e < hi) return true;
    return false;
}

void require_member(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& z) {
    if (!membership(spec, bm, z))
        throw ValidationError("state " + format_state(z) + " is not a member of the set " +
                              bm.str());
}

void require_assumption(const PopulationSpec& spec) {
    if (!validate_spec(spec).stability_assumption)
        throw AnalyticsUnsupported(
            "stability analysis needs anticoordinator temper integer parts strictly "
            "descending; this population violates that");
}

struct ClauseTracker {
    std::vector<ClauseStat> stats;
    StabilityVerdict* verdict;
    const State* current;

    ClauseStat& stat(const std::string& name) {
        for (auto& s : stats)
            if (s.clause == name) return s;
        stats.push_back({name, 0, 0});
        return stats.back();
    }

    // Returns false on first recorded failure.
    bool check(const std::string& name, bool applicable, bool pass,
               const std::string& description) {
        auto& s = stat(name);
        if (!applicable) return true;
        ++s.applicable;
        if (pass) {
            ++s.passed;
            return true;
        }
        if (verdict->stable) {
            verdict->stable = false;
            verdict->failing_condition = name;
            verdict->witness_state = *current;
            verdict->witness_perturbation = description;
        }
        return false;
    }
};

}  // namespace

int set_distance(const State& x, const std::vector<State>& members) {
    if (members.empty()) throw ValidationError("set distance against an empty member list");
    int best = l1(x, members.front());
    for (std::size_t k = 1; k < members.size() && best > 0; ++k)
        best = std::min(best, l1(x, members[k]));
    return best;
}

TightIndexSets tight_index_scan(const PopulationSpec& spec, const BenchmarkQuad& bm,
                                const State& z) {
    TightIndexSets out;
    for (int i = bm.p + 1; i <= bm.q - 1; ++i) {
        const long long bound = spec.anti_temper(i).floor() + 1;
        if (upper_condition_sum(spec, bm, z, i) == bound) out.upper_tight.push_back(i);
        if (lower_condition_sum(spec, bm, z, i) == bound) out.lower_tight.push_back(i);
    }
    return out;
}

StateMarkers marker_scan(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& z) {
    StateMarkers m;
    const Rational a(total_a(spec, z));
    m.max_slack = bm.p;
    m.min_loaded = bm.q;
    for (int i = bm.p + 1; i <= bm.q - 1; ++i) {
        m.wander_a += z.anti[i - 1];
        m.wander_n += spec.anti_count(i);
        if (z.anti[i - 1] < spec.anti_count(i)) m.max_slack = std::max(m.max_slack, i);
        if (z.anti[i - 1] > 0) m.min_loaded = std::min(m.min_loaded, i);
    }

    auto scan_max = [&](auto&& pred) {
        int best = bm.p;
        for (int i = bm.p + 1; i <= bm.q - 1; ++i)
            if (pred(i)) best = std::max(best, i);
        return best;
    };
    auto scan_min = [&](auto&& pred) {
        int best = bm.q;
        for (int i = bm.p + 1; i <= bm.q - 1; ++i)
            if (pred(i)) best = std::min(best, i);
        return best;
    };

    if (m.wander_a == m.wander_n) {
        m.join_max_up = bm.p;
        m.quit_min_up = bm.q;
    } else {
        m.join_max_up = scan_max([&](int i) {
            return z.anti[i - 1] < spec.anti_count(i) && a <= spec.anti_temper(i) - Rational(1);
        });
        m.quit_min_up = scan_min(
            [&](int i) { return z.anti[i - 1] > 0 && a > spec.anti_temper(i); });
    }

    if (m.wander_a == 0) {
        m.join_max_down = bm.p;
        m.quit_min_down = bm.q;
    } else {
        m.join_max_down = scan_max([&](int i) {
            return z.anti[i - 1] < spec.anti_count(i) && a <= spec.anti_temper(i) + Rational(1);
        });
        m.quit_min_down = scan_min(
            [&](int i) { return z.anti[i - 1] > 0 && a > spec.anti_temper(i) + Rational(2); });
    }
    return m;
}

TightIndexSets lr_index_sets(const PopulationSpec& spec, const BenchmarkQuad& bm,
                             const State& z) {
    require_member(spec, bm, z);
    return tight_index_scan(spec, bm, z);
}

StateMarkers markers(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& z) {
    require_member(spec, bm, z);
    return marker_scan(spec, bm, z);
}

bool theorem_guards_hold(const PopulationSpec& spec, const BenchmarkQuad& bm) {
    return bm.p + bm.p_c >= 1 &&
           bm.q + bm.q_c <= spec.num_anti_types() + spec.num_coor_types() + 1;
}

std::pair<long long, long long> theorem_a_window(const PopulationSpec& spec,
                                                 const BenchmarkQuad& bm) {
    const long long lo =
        std::max(spec.anti_temper(bm.q).floor(), spec.coor_temper(bm.p_c).ceil()) + 2;
    const long long hi =
        std::min(spec.anti_temper(bm.p).floor(), spec.coor_temper(bm.q_c).ceil() - 2);
    return {lo, hi};
}

StabilityVerdict check_proposition(const PopulationSpec& spec, const BenchmarkQuad& bm,
                                   const std::vector<State>& members) {
    require_analytic(spec);
    require_assumption(spec);
    if (members.empty()) throw ValidationError("stability check on an empty member list");

    StabilityVerdict verdict;
    verdict.method = "proposition";
    ClauseTracker track{{}, &verdict, nullptr};

    const int b = spec.num_anti_types(), bc = spec.num_coor_types();
    const bool has_b_fixed = bm.q + bm.q_c <= b + bc + 1;
    const bool has_a_fixed = bm.p + bm.p_c >= 1;

    std::vector<State> ordered = members;
    std::sort(ordered.begin(), ordered.end(), canonical_less);

    for (const State& z : ordered) {
        track.current = &z;
        const long long a = total_a(spec, z);
        const TightIndexSets tight = tight_index_scan(spec, bm, z);
        const StateMarkers m = marker_scan(spec, bm, z);

        const bool at_upper_edge = a == spec.anti_temper(bm.p).floor() + 1 ||
                                   a == spec.coor_temper(bm.q_c).ceil() - 1;
        if (!track.check("1", at_upper_edge,
                         !hits_open_closed(tight.upper_tight, bm.p, m.max_slack),
                         "one more A-player can strand a tight upper condition"))
            break;

        const bool at_lower_edge = a == spec.anti_temper(bm.q).floor() + 1 ||
                                   a == spec.coor_temper(bm.p_c).ceil() + 1;
        if (!track.check("2", at_lower_edge,
                         !hits_closed_open(tight.lower_tight, m.min_loaded, bm.q),
                         "one less A-player can strand a tight lower condition"))
            break;

        if (!track.check("3a", has_b_fixed,
                         a <= std::min(spec.anti_temper(bm.p).floor(),
                                       spec.coor_temper(bm.q_c).ceil() - 2),
                         "A-count leaves no room for a B-fixed agent to be flipped"))
            break;
        if (!track.check("3b", has_b_fixed,
                         !hits_closed_open(tight.lower_tight, m.quit_min_up, bm.q),
                         "a flipped B-fixed agent can push an A-player below a tight "
                         "lower condition"))
            break;

        if (!track.check("4a", has_a_fixed,
                         a >= std::max(spec.anti_temper(bm.q).floor() + 2,
                                       spec.coor_temper(bm.p_c).ceil() + 2),
                         "A-count leaves no room for an A-fixed agent to be flipped"))
            break;
        if (!track.check("4b", has_a_fixed,
                         !hits_open_closed(tight.upper_tight, bm.p, m.join_max_down),
                         "a flipped A-fixed agent can pull a B-player above a tight "
                         "upper condition"))
            break;

        const bool pass5a =
            !hits_closed_open(tight.lower_tight, m.quit_min_up, m.max_slack) ||
            !hits_open_closed(tight.upper_tight, m.quit_min_up, m.max_slack);
        if (!track.check("5a", m.wander_a < m.wander_n, pass5a,
                         "an added A-player plus a quitting type strands both conditions"))
            break;
        const bool pass5b =
            !hits_closed_open(tight.lower_tight, m.min_loaded, m.join_max_down) ||
            !hits_open_closed(tight.upper_tight, m.min_loaded, m.join_max_down);
        if (!track.check("5b", m.wander_a > 0, pass5b,
                         "a removed A-player plus a joining type strands both conditions"))
            break;

        if (!track.check("6", m.wander_a < m.wander_n - 1 || has_b_fixed,
                         !hits_open_closed(tight.upper_tight, bm.p, m.join_max_up),
                         "two B-players joining can breach a tight upper condition"))
            break;

        if (!track.check("7", m.wander_a > 1 || has_a_fixed,
                         !hits_closed_open(tight.lower_tight, m.quit_min_down, bm.q),
                         "two A-players quitting can breach a tight lower condition"))
            break;
    }

    verdict.clause_stats = std::move(track.stats);
    return verdict;
}

StabilityVerdict check_theorem(const PopulationSpec& spec, const BenchmarkQuad& bm,
                               const std::vector<State>& members) {
    require_analytic(spec);
    require_assumption(spec);
    if (members.empty()) throw ValidationError("stability check on an empty member list");
    if (!theorem_guards_hold(spec, bm))
        throw AnalyticsUnsupported("set " + bm.str() +
                                   " lacks an A-fixed or B-fixed type; use check_proposition");

    StabilityVerdict verdict;
    verdict.method = "theorem";
    ClauseTracker track{{}, &verdict, nullptr};
    const auto [lo, hi] = theorem_a_window(spec, bm);

    std::vector<State> ordered = members;
    std::sort(ordered.begin(), ordered.end(), canonical_less);

    for (const State& z : ordered) {
        track.current = &z;
        const long long a = total_a(spec, z);
        const TightIndexSets tight = tight_index_scan(spec, bm, z);
        const StateMarkers m = marker_scan(spec, bm, z);

        if (!track.check("window", true, a >= lo && a <= hi,
                         "A-count sits at the edge where a flipped fixed agent escapes"))
            break;
        const bool pass2 = !hits_open_closed(tight.upper_tight, bm.p, m.join_max_down) &&
                           !hits_closed_open(tight.lower_tight, m.quit_min_up, bm.q);
        if (!track.check("intersections", true, pass2,
                         "a tight condition intersects the reachable switch range"))
            break;
    }
    verdict.clause_stats = std::move(track.stats);
    return verdict;
}

StabilityVerdict verify_one_step(const PopulationSpec& spec, const std::vector<State>& members,
                                 std::uint64_t cap) {
    if (members.empty()) throw ValidationError("stability check on an empty member list");

    std::unordered_set<State, StateHash> inside(members.begin(), members.end());
    std::unordered_set<State, StateHash> ring;

    auto each_neighbor = [&](const State& z, auto&& fn) {
        State x = z;
        for (std::size_t i = 0; i < x.anti.size(); ++i) {
            const int orig = x.anti[i];
            if (orig + 1 <= spec.anti_count((int)i + 1)) {
                x.anti[i] = orig + 1;
                fn(x);
            }
            if (orig - 1 >= 0) {
                x.anti[i] = orig - 1;
                fn(x);
            }
            x.anti[i] = orig;
        }
        for (std::size_t j = 0; j < x.coor.size(); ++j) {
            const int orig = x.coor[j];
            if (orig + 1 <= spec.coor_count((int)j + 1)) {
                x.coor[j] = orig + 1;
                fn(x);
            }
            if (orig - 1 >= 0) {
                x.coor[j] = orig - 1;
                fn(x);
            }
            x.coor[j] = orig;
        }
    };

    for (const State& z : members) {
        each_neighbor(z, [&](const State& x) {
            if (!inside.count(x)) ring.insert(x);
        });
        if (ring.size() > cap)
            throw CapExceeded("distance-one neighborhood exceeds cap");
    }

    StabilityVerdict verdict;
    verdict.method = "one-step";
    long long checked = 0, passed = 0;

    std::vector<State> ring_ordered(ring.begin(), ring.end());
    std::sort(ring_ordered.begin(), ring_ordered.end(), canonical_less);

    for (const State& x : ring_ordered) {
        for (const Activation& act : valid_activations(spec, x)) {
            const State y = step(spec, x, act);
            ++checked;
            if (inside.count(y) || ring.count(y)) {
                ++passed;
                continue;
            }
            if (verdict.stable) {
                verdict.stable = false;
                verdict.failing_condition = "one-step";
                verdict.witness_state = x;
                verdict.witness_perturbation =
                    std::string("activating a ") + to_string(act.current) + "-playing " +
                    to_string(act.role) + " of type " + std::to_string(act.type) +
                    " reaches " + format_state(y) + " at distance 2";
            }
        }
        if (!verdict.stable) break;
    }
    verdict.clause_stats.push_back({"one-step", checked, passed});
    return verdict;
}

}  // namespace brd
