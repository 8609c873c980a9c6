#include "brd/invariant.hpp"

#include <algorithm>
#include <map>

#include "brd/errors.hpp"

namespace brd {

void require_analytic(const PopulationSpec& spec) {
    if (!spec.constants.empty())
        throw AnalyticsUnsupported(
            "constant-strategy classes are outside the set characterization; "
            "only the simulation and the transition-graph oracle accept them");
}

std::set<int> delta_set(const PopulationSpec& spec, int r) {
    require_analytic(spec);
    if (r < 0 || r > spec.num_anti_types())
        throw std::out_of_range("first benchmark out of range");
    std::set<int> out;
    for (int d = 0; d <= spec.num_coor_types(); ++d) {
        const Rational mid(spec.anti_prefix(r) + spec.coor_prefix(d));
        if (spec.coor_temper(d) + Rational(1) <= mid && mid <= spec.anti_temper(r) + Rational(1))
            out.insert(d);
    }
    return out;
}

State seed_state(const PopulationSpec& spec, int r, int delta) {
    State y = all_b_state(spec);
    for (int i = 1; i <= r; ++i) y.anti[i - 1] = spec.anti_count(i);
    for (int j = 1; j <= delta; ++j) y.coor[j - 1] = spec.coor_count(j);
    return y;
}

std::vector<std::pair<int, int>> acceptable_pairs(const PopulationSpec& spec) {
    require_analytic(spec);
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r <= spec.num_anti_types(); ++r) {
        for (int d : delta_set(spec, r)) {
            const State y = seed_state(spec, r, d);
            const State peak = sweep_coor_rl(spec, sweep_anti_rl(spec, y).final_state).final_state;
            const Rational a(total_a(spec, peak));
            if (spec.anti_temper(r + 1) < a && a <= spec.anti_temper(r) + Rational(1))
                out.emplace_back(r, d);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> psi_set(const PopulationSpec& spec) {
    std::vector<std::pair<int, int>> out;
    for (auto [r, d] : acceptable_pairs(spec)) {
        const CandidateSet cand = benchmarks(spec, r, d);
        if (decide_nonempty(spec, cand.quad)) out.emplace_back(r, d);
    }
    return out;
}

CandidateSet benchmarks(const PopulationSpec& spec, int r, int delta) {
    require_analytic(spec);
    const auto pairs = acceptable_pairs(spec);
    if (std::find(pairs.begin(), pairs.end(), std::make_pair(r, delta)) == pairs.end())
        throw ValidationError("pair (" + std::to_string(r) + "," + std::to_string(delta) +
                              ") fails the acceptance test");

    CandidateSet cand;
    cand.r = r;
    cand.delta = delta;
    cand.generating_pairs = {{r, delta}};
    cand.seed_low = seed_state(spec, r, delta);
    cand.seed_low_anti = sweep_anti_rl(spec, cand.seed_low).final_state;
    cand.seed_low_full = sweep_coor_rl(spec, cand.seed_low_anti).final_state;

    const int eta = tight_benchmarks(spec, cand.seed_low_anti).q;
    const int sig = tight_benchmarks(spec, cand.seed_low_full).q_c;

    State z = all_b_state(spec);
    for (int i = 1; i <= eta - 1; ++i) z.anti[i - 1] = spec.anti_count(i);
    for (int j = 1; j <= sig - 1; ++j) z.coor[j - 1] = spec.coor_count(j);
    cand.seed_high = z;
    cand.seed_high_anti =
        r + 1 <= spec.num_anti_types() ? sweep_anti_lr_from(spec, z, r + 1).final_state : z;
    cand.seed_high_full = sweep_coor_lr(spec, cand.seed_high_anti).final_state;

    const int zeta = tight_benchmarks(spec, cand.seed_high_full).p_c;

    cand.quad = BenchmarkQuad{r, eta, sig, zeta};
    if (!in_omega(spec, cand.quad))
        throw ValidationError("constructed benchmarks " + cand.quad.str() +
                              " fall outside the admissible index set");
    auto [lo, hi] = a_bounds(spec, cand.quad);
    cand.a_lo = lo;
    cand.a_hi = hi;
    return cand;
}

long long upper_condition_sum(const PopulationSpec& spec, const BenchmarkQuad& bm,
                              const State& x, int i) {
    long long s = spec.coor_prefix(bm.p_c) + spec.anti_prefix(bm.p);
    for (int k = i; k <= bm.q - 1; ++k) s += x.anti[k - 1];
    return s;
}

long long lower_condition_sum(const PopulationSpec& spec, const BenchmarkQuad& bm,
                              const State& x, int i) {
    long long s = spec.coor_prefix(bm.q_c - 1) + spec.anti_prefix(bm.p);
    for (int k = bm.p + 1; k <= i; ++k) s += x.anti[k - 1];
    for (int k = i + 1; k <= bm.q - 1; ++k) s += spec.anti_count(k);
    return s;
}

bool membership(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& x) {
    require_analytic(spec);
    if (!in_omega(spec, bm)) throw ValidationError("benchmarks " + bm.str() + " not admissible");
    if (!state_in_block_set(spec, bm, x)) return false;
    for (int i = bm.p + 1; i <= bm.q - 1; ++i) {
        const long long bound = spec.anti_temper(i).floor() + 1;
        if (upper_condition_sum(spec, bm, x, i) > bound) return false;
        if (lower_condition_sum(spec, bm, x, i) < bound) return false;
    }
    return true;
}

bool decide_nonempty(const PopulationSpec& spec, const BenchmarkQuad& bm) {
    require_analytic(spec);
    if (!in_omega(spec, bm)) throw ValidationError("benchmarks " + bm.str() + " not admissible");
    // The wandering coordinator coordinates are unconstrained, so emptiness
    // hinges on the anticoordinating conditions alone. Pushing A-players
    // toward low types relaxes every upper (suffix) condition and helps every
    // lower (prefix) condition, so the left-greedy maximal filling is
    // feasible iff anything is.
    const int lo = bm.p + 1, hi = bm.q - 1;
    if (lo > hi) return true;
    std::vector<long long> caps(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) {
        caps[i - lo] = spec.anti_temper(i).floor() + 1 - spec.coor_prefix(bm.p_c) -
                       spec.anti_prefix(bm.p);
        if (caps[i - lo] < 0) return false;  // violated even by the all-B filling
    }
    std::vector<int> fill(hi - lo + 1, 0);
    for (int k = lo; k <= hi; ++k) {
        long long room = spec.anti_count(k);
        for (int i = lo; i <= k; ++i) {
            long long used = 0;
            for (int j = i; j < k; ++j) used += fill[j - lo];
            room = std::min(room, caps[i - lo] - used);
        }
        fill[k - lo] = (int)std::max(0ll, room);
    }
    State x = all_b_state(spec);
    for (int i = 1; i <= bm.p; ++i) x.anti[i - 1] = spec.anti_count(i);
    for (int j = 1; j <= bm.p_c; ++j) x.coor[j - 1] = spec.coor_count(j);
    for (int k = lo; k <= hi; ++k) x.anti[k - 1] = fill[k - lo];
    for (int i = lo; i <= hi; ++i) {
        const long long bound = spec.anti_temper(i).floor() + 1;
        if (lower_condition_sum(spec, bm, x, i) < bound) return false;
    }
    return true;
}

std::vector<State> enumerate_set(const PopulationSpec& spec, const BenchmarkQuad& bm,
                                 std::uint64_t cap) {
    require_analytic(spec);
    if (!in_omega(spec, bm)) throw ValidationError("benchmarks " + bm.str() + " not admissible");

    std::uint64_t product = 1;
    for (int i = bm.p + 1; i <= bm.q - 1; ++i) {
        product *= (std::uint64_t)spec.anti_count(i) + 1;
        if (product > cap) throw CapExceeded("wandering-range product exceeds cap");
    }
    for (int j = bm.p_c + 1; j <= bm.q_c - 1; ++j) {
        product *= (std::uint64_t)spec.coor_count(j) + 1;
        if (product > cap) throw CapExceeded("wandering-range product exceeds cap");
    }

    State x = all_b_state(spec);
    for (int i = 1; i <= bm.p; ++i) x.anti[i - 1] = spec.anti_count(i);
    for (int j = 1; j <= bm.p_c; ++j) x.coor[j - 1] = spec.coor_count(j);

    // Wandering coordinates in canonical significance order: anticoordinators
    // ascending, then coordinators descending by type index.
    struct Coord {
        bool is_anti;
        int type;
        int cap;
    };
    std::vector<Coord> coords;
    for (int i = bm.p + 1; i <= bm.q - 1; ++i) coords.push_back({true, i, spec.anti_count(i)});
    for (int j = bm.q_c - 1; j >= bm.p_c + 1; --j) coords.push_back({false, j, spec.coor_count(j)});

    std::vector<State> out;
    std::vector<int> digits(coords.size(), 0);
    for (;;) {
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (coords[k].is_anti)
                x.anti[coords[k].type - 1] = digits[k];
            else
                x.coor[coords[k].type - 1] = digits[k];
        }
        if (membership(spec, bm, x)) out.push_back(x);
        int k = (int)coords.size() - 1;
        while (k >= 0 && digits[k] == coords[k].cap) digits[k--] = 0;
        if (k < 0) break;
        ++digits[k];
    }
    return out;
}

std::pair<int, int> a_bounds(const PopulationSpec& spec, const BenchmarkQuad& bm) {
    require_analytic(spec);
    const long long lo = std::max(spec.coor_temper(bm.p_c).ceil() + 1,
                                  spec.anti_temper(bm.q).floor() + 1);
    const long long hi = std::min(spec.coor_temper(bm.q_c).ceil() - 1,
                                  spec.anti_temper(bm.p).floor() + 1);
    return {(int)lo, (int)hi};
}

std::vector<CandidateSet> characterize(const PopulationSpec& spec, std::uint64_t cap) {
    const auto pairs = psi_set(spec);
    std::map<BenchmarkQuad, CandidateSet> by_quad;
    std::vector<BenchmarkQuad> order;
    for (auto [r, d] : pairs) {
        CandidateSet cand = benchmarks(spec, r, d);
        auto it = by_quad.find(cand.quad);
        if (it != by_quad.end()) {
            it->second.generating_pairs.emplace_back(r, d);
            continue;
        }
        order.push_back(cand.quad);
        by_quad.emplace(cand.quad, std::move(cand));
    }
    std::vector<CandidateSet> out;
    for (const auto& quad : order) {
        CandidateSet& cand = by_quad.at(quad);
        try {
            cand.members = enumerate_set(spec, quad, cap);
        } catch (const CapExceeded&) {
            cand.members.reset();  // benchmarks and bounds only
        }
        out.push_back(std::move(cand));
    }
    return out;
}

}  // namespace brd
