#include "brd/population.hpp"

#include <algorithm>
#include <sstream>

#include "brd/errors.hpp"

namespace brd {

const char* to_string(Strategy s) { return s == Strategy::A ? "A" : "B"; }

const char* to_string(Role r) {
    switch (r) {
        case Role::Anticoordinator: return "anticoordinator";
        case Role::Coordinator: return "coordinator";
        case Role::Constant: return "constant";
    }
    return "?";
}

ClassDescriptor derive_class(const PayoffMatrix& m, int n) {
    const Rational sigma = m.a - m.c + m.d - m.b;
    const Rational gamma = m.d - m.b;
    ClassDescriptor out;
    if (sigma == Rational(0)) {
        // Rule degenerates to "play A iff 0 >= gamma*(n-1)".
        if (gamma <= Rational(0)) {
            out.role = Role::Coordinator;  // constant-A, exactly temper 0
            out.temper = Rational(0);
        } else {
            out.role = Role::Constant;
            out.locked = Strategy::B;
        }
        return out;
    }
    const Rational temper = gamma / (sigma * Rational(n - 1));
    const bool coordinating = sigma > Rational(0);
    if (coordinating) {
        if (temper <= Rational(0)) {  // always satisfied: constant-A
            out.role = Role::Coordinator;
            out.temper = Rational(0);
        } else if (temper > Rational(n - 1)) {  // unreachable: constant-B
            out.role = Role::Constant;
            out.locked = Strategy::B;
        } else {
            out.role = Role::Coordinator;
            out.temper = temper;
        }
    } else {
        if (temper >= Rational(n - 1)) {  // always satisfied: constant-A
            out.role = Role::Coordinator;
            out.temper = Rational(0);
        } else if (temper < Rational(0)) {  // never satisfied: constant-B
            out.role = Role::Constant;
            out.locked = Strategy::B;
        } else {
            out.role = Role::Anticoordinator;
            out.temper = temper;
        }
    }
    return out;
}

int PopulationSpec::total_agents() const {
    int n = 0;
    for (const auto& c : anti) n += c.count;
    for (const auto& c : coor) n += c.count;
    for (const auto& c : constants) n += c.count;
    return n;
}

int PopulationSpec::constant_a_count() const {
    int n = 0;
    for (const auto& c : constants)
        if (c.strategy == Strategy::A) n += c.count;
    return n;
}

Rational PopulationSpec::anti_temper(int i) const {
    if (i == 0) return Rational(total_agents());
    if (i == num_anti_types() + 1) return Rational(-2);
    return anti[i - 1].temper;
}

Rational PopulationSpec::coor_temper(int j) const {
    if (j == 0) return Rational(-2);
    if (j == num_coor_types() + 1) return Rational(total_agents() + 2);
    return coor[j - 1].temper;
}

int PopulationSpec::anti_prefix(int k) const {
    int s = 0;
    for (int i = 1; i <= k; ++i) s += anti_count(i);
    return s;
}

int PopulationSpec::coor_prefix(int k) const {
    int s = 0;
    for (int j = 1; j <= k; ++j) s += coor_count(j);
    return s;
}

bool PopulationSpec::state_in_space(const State& x) const {
    if ((int)x.anti.size() != num_anti_types()) return false;
    if ((int)x.coor.size() != num_coor_types()) return false;
    for (int i = 1; i <= num_anti_types(); ++i)
        if (x.anti[i - 1] < 0 || x.anti[i - 1] > anti_count(i)) return false;
    for (int j = 1; j <= num_coor_types(); ++j)
        if (x.coor[j - 1] < 0 || x.coor[j - 1] > coor_count(j)) return false;
    return true;
}

ValidationReport validate_spec(const PopulationSpec& spec) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    if (spec.anti.empty()) fail("at least one anticoordinating type is required");
    if (spec.coor.empty()) fail("at least one coordinating type is required");
    const int n = spec.total_agents();
    if (n < 2) fail("population must contain at least two agents");

    for (const auto& c : spec.anti)
        if (c.count < 1) fail("anticoordinator type with non-positive count");
    for (const auto& c : spec.coor)
        if (c.count < 1) fail("coordinator type with non-positive count");
    for (const auto& c : spec.constants)
        if (c.count < 1) fail("constant class with non-positive count");

    const Rational lo(0), hi(n - 1);
    for (const auto& c : spec.anti)
        if (c.temper < lo || c.temper > hi)
            fail("anticoordinator temper " + c.temper.str() + " outside [0, n-1]");
    for (const auto& c : spec.coor)
        if (c.temper < lo || c.temper > hi)
            fail("coordinator temper " + c.temper.str() + " outside [0, n-1]");

    for (std::size_t i = 1; i < spec.anti.size(); ++i)
        if (!(spec.anti[i - 1].temper > spec.anti[i].temper))
            fail("anticoordinator tempers not strictly descending");
    for (std::size_t j = 1; j < spec.coor.size(); ++j)
        if (!(spec.coor[j].temper > spec.coor[j - 1].temper))
            fail("coordinator tempers not strictly ascending by type index");

    for (std::size_t i = 1; i < spec.anti.size(); ++i)
        if (spec.anti[i].temper.floor() >= spec.anti[i - 1].temper.floor())
            rep.stability_assumption = false;

    rep.has_constants = !spec.constants.empty();
    return rep;
}

PopulationSpec normalize_spec(PopulationSpec spec) {
    auto merge = [](std::vector<AgentClass>& classes) {
        std::vector<AgentClass> out;
        for (const auto& c : classes) {
            bool merged = false;
            for (auto& o : out) {
                if (o.temper == c.temper) {
                    o.count += c.count;
                    merged = true;
                    break;
                }
            }
            if (!merged) out.push_back(c);
        }
        classes = std::move(out);
    };
    merge(spec.anti);
    merge(spec.coor);

    std::vector<ConstantClass> consts;
    for (const auto& c : spec.constants) {
        bool merged = false;
        for (auto& o : consts)
            if (o.strategy == c.strategy) {
                o.count += c.count;
                merged = true;
            }
        if (!merged) consts.push_back(c);
    }
    spec.constants = std::move(consts);
    return spec;
}

int total_a(const PopulationSpec& spec, const State& x) {
    int a = spec.constant_a_count();
    for (int v : x.anti) a += v;
    for (int v : x.coor) a += v;
    return a;
}

bool BenchmarkQuad::operator<(const BenchmarkQuad& o) const {
    if (p != o.p) return p < o.p;
    if (q != o.q) return q < o.q;
    if (q_c != o.q_c) return q_c < o.q_c;
    return p_c < o.p_c;
}

std::string BenchmarkQuad::str() const {
    std::ostringstream os;
    os << "(" << p << "," << q << "," << q_c << "," << p_c << ")";
    return os.str();
}

bool in_omega(const PopulationSpec& spec, const BenchmarkQuad& bm) {
    const int b = spec.num_anti_types(), bc = spec.num_coor_types();
    return bm.p >= 0 && bm.p <= b && bm.q >= bm.p + 1 && bm.q <= b + 1 &&
           bm.p_c >= 0 && bm.p_c <= bc && bm.q_c >= bm.p_c + 1 && bm.q_c <= bc + 1;
}

bool state_in_block_set(const PopulationSpec& spec, const BenchmarkQuad& bm, const State& x) {
    if (!spec.state_in_space(x)) return false;
    for (int i = 1; i <= bm.p; ++i)
        if (x.anti[i - 1] != spec.anti_count(i)) return false;
    for (int i = bm.q; i <= spec.num_anti_types(); ++i)
        if (x.anti[i - 1] != 0) return false;
    for (int j = 1; j <= bm.p_c; ++j)
        if (x.coor[j - 1] != spec.coor_count(j)) return false;
    for (int j = bm.q_c; j <= spec.num_coor_types(); ++j)
        if (x.coor[j - 1] != 0) return false;
    return true;
}

BenchmarkQuad tight_benchmarks(const PopulationSpec& spec, const State& x) {
    const int b = spec.num_anti_types(), bc = spec.num_coor_types();
    BenchmarkQuad bm;
    bm.p = 0;
    while (bm.p < b && x.anti[bm.p] == spec.anti_count(bm.p + 1)) ++bm.p;
    bm.q = b + 1;
    while (bm.q > 1 && x.anti[bm.q - 2] == 0) --bm.q;
    bm.q = std::max(bm.q, bm.p + 1);
    bm.p_c = 0;
    while (bm.p_c < bc && x.coor[bm.p_c] == spec.coor_count(bm.p_c + 1)) ++bm.p_c;
    bm.q_c = bc + 1;
    while (bm.q_c > 1 && x.coor[bm.q_c - 2] == 0) --bm.q_c;
    bm.q_c = std::max(bm.q_c, bm.p_c + 1);
    return bm;
}

bool canonical_less(const State& a, const State& b) {
    if (a.anti != b.anti) return a.anti < b.anti;
    // Coordinator part compares from the highest type down.
    const std::size_t m = a.coor.size();
    for (std::size_t k = 0; k < m; ++k) {
        int va = a.coor[m - 1 - k], vb = b.coor[m - 1 - k];
        if (va != vb) return va < vb;
    }
    return false;
}

std::string format_state(const State& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.anti.size(); ++i) {
        if (i) os << ",";
        os << x.anti[i];
    }
    os << "|";
    for (std::size_t j = 0; j < x.coor.size(); ++j) {
        if (j) os << ",";
        os << x.coor[x.coor.size() - 1 - j];
    }
    return os.str();
}

State parse_state(const PopulationSpec& spec, const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw ValidationError("state literal must contain '|' between parts: " + text);
    auto split = [](const std::string& s) {
        std::vector<int> out;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (!tok.empty()) out.push_back(std::stoi(tok));
        }
        return out;
    };
    State x;
    x.anti = split(text.substr(0, bar));
    std::vector<int> coor_desc = split(text.substr(bar + 1));
    x.coor.assign(coor_desc.rbegin(), coor_desc.rend());
    if (!spec.state_in_space(x))
        throw ValidationError("state literal outside the state space: " + text);
    return x;
}

State all_b_state(const PopulationSpec& spec) {
    State x;
    x.anti.assign(spec.num_anti_types(), 0);
    x.coor.assign(spec.num_coor_types(), 0);
    return x;
}

std::size_t StateHash::operator()(const State& x) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
        h ^= (std::size_t)(v + 0x9e3779b9);
        h *= 1099511628211ull;
    };
    for (int v : x.anti) mix(v);
    for (int v : x.coor) mix(v);
    return h;
}

}  // namespace brd
