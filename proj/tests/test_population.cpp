#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brd/invariant.hpp"
#include "brd/population.hpp"
#include "fixtures.hpp"

using namespace brd;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 6) == Rational::parse("1/6"));
    CHECK(Rational::parse("9.5") == Rational(19, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(3) < Rational(7, 2));
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(18).str() == "18");
    CHECK(Rational(19, 2).str() == "19/2");
}

TEST_CASE("derive_class on plain coordination and anticoordination payoffs") {
    {
        const ClassDescriptor d = derive_class({Rational(2), Rational(0), Rational(0), Rational(1)}, 3);
        CHECK(d.role == Role::Coordinator);
        CHECK(d.temper == Rational(1, 6));
    }
    {
        const ClassDescriptor d = derive_class({Rational(0), Rational(1), Rational(1), Rational(0)}, 3);
        CHECK(d.role == Role::Anticoordinator);
        CHECK(d.temper == Rational(1, 4));
    }
    {
        // all-equal payoffs: "play A iff 0 >= 0", a constant-A agent
        const ClassDescriptor d = derive_class({Rational(1), Rational(1), Rational(1), Rational(1)}, 3);
        CHECK(d.role == Role::Coordinator);
        CHECK(d.temper == Rational(0));
    }
    {
        // zero net payoff signal but gamma > 0: never plays A
        const ClassDescriptor d = derive_class({Rational(0), Rational(0), Rational(1), Rational(1)}, 3);
        CHECK(d.role == Role::Constant);
        CHECK(d.locked == Strategy::B);
    }
}

TEST_CASE("derive_class is invariant under positive payoff scaling") {
    fixtures::Rng rng{2024};
    for (int trial = 0; trial < 200; ++trial) {
        PayoffMatrix m{Rational(rng.range(-6, 6)), Rational(rng.range(-6, 6)),
                       Rational(rng.range(-6, 6)), Rational(rng.range(-6, 6))};
        const int n = rng.range(2, 9);
        const Rational k(rng.range(1, 7), rng.range(1, 7));
        const PayoffMatrix scaled{m.a * k, m.b * k, m.c * k, m.d * k};
        const ClassDescriptor d1 = derive_class(m, n), d2 = derive_class(scaled, n);
        CHECK(d1.role == d2.role);
        if (d1.role != Role::Constant) CHECK(d1.temper == d2.temper);
    }
}

TEST_CASE("validate_spec accepts the 42-agent population") {
    const auto spec = fixtures::mixed42();
    const ValidationReport rep = validate_spec(spec);
    CHECK(rep.ok);
    CHECK(rep.stability_assumption);
    CHECK(!rep.has_constants);
    CHECK(spec.total_agents() == 42);
}

TEST_CASE("validate_spec flags ordering violations and equal floors") {
    PopulationSpec spec;
    spec.anti = {{Role::Anticoordinator, Rational(9), 1},
                 {Role::Anticoordinator, Rational(19, 2), 1}};
    spec.coor = {{Role::Coordinator, Rational(3), 2}};
    const ValidationReport rep = validate_spec(spec);
    CHECK(!rep.ok);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.find("descending") != std::string::npos) found = true;
    CHECK(found);

    PopulationSpec spec2;
    spec2.anti = {{Role::Anticoordinator, Rational(19, 2), 1},
                  {Role::Anticoordinator, Rational(46, 5), 1}};  // 9.5 and 9.2
    spec2.coor = {{Role::Coordinator, Rational(3), 20}};
    const ValidationReport rep2 = validate_spec(spec2);
    CHECK(rep2.ok);
    CHECK(!rep2.stability_assumption);
}

TEST_CASE("normalize_spec merges duplicate tempers") {
    PopulationSpec spec;
    spec.anti = {{Role::Anticoordinator, Rational(5), 2},
                 {Role::Anticoordinator, Rational(5), 3}};
    spec.coor = {{Role::Coordinator, Rational(1), 1}};
    const PopulationSpec merged = normalize_spec(spec);
    REQUIRE(merged.num_anti_types() == 1);
    CHECK(merged.anti_count(1) == 5);
}

TEST_CASE("total_a matches hand counts") {
    const auto spec = fixtures::mixed42();
    CHECK(total_a(spec, fixtures::st(spec, "4,1,1,0|0,0,0,0,3")) == 9);
    CHECK(total_a(spec, all_b_state(spec)) == 0);
    CHECK(total_a(spec, fixtures::st(spec, "0,0,0,0|15,1,10,2,3")) == 31);
}

TEST_CASE("state literals round-trip in canonical order") {
    const auto spec = fixtures::mixed42();
    const State x = fixtures::st(spec, "4,1,1,0|0,0,0,0,3");
    CHECK(x.anti == std::vector<int>{4, 1, 1, 0});
    CHECK(x.coor == std::vector<int>{3, 0, 0, 0, 0});  // type 1 first internally
    CHECK(format_state(x) == "4,1,1,0|0,0,0,0,3");
}

TEST_CASE("tight_benchmarks on worked states") {
    const auto spec = fixtures::mixed42();
    {
        const BenchmarkQuad bm = tight_benchmarks(spec, fixtures::st(spec, "4,1,1,1|0,0,0,2,3"));
        CHECK(bm == BenchmarkQuad{1, 5, 3, 2});
    }
    {
        State full;
        full.anti = {4, 3, 1, 3};
        full.coor = {3, 2, 10, 1, 15};
        CHECK(tight_benchmarks(spec, full) == BenchmarkQuad{4, 5, 6, 5});
    }
    {
        const BenchmarkQuad bm = tight_benchmarks(spec, fixtures::st(spec, "0,0,0,0|15,1,10,2,3"));
        CHECK(bm == BenchmarkQuad{0, 1, 6, 5});
    }
}

TEST_CASE("tight_benchmarks is admissible, containing, and componentwise minimal") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto spec = fixtures::random_small_spec(seed, false);
        fixtures::Rng rng{seed * 977};
        for (int trial = 0; trial < 40; ++trial) {
            const State x = fixtures::random_state(spec, rng);
            const BenchmarkQuad tight = tight_benchmarks(spec, x);
            REQUIRE(in_omega(spec, tight));
            REQUIRE(state_in_block_set(spec, tight, x));
            const int b = spec.num_anti_types(), bc = spec.num_coor_types();
            for (int p = 0; p <= b; ++p)
                for (int q = p + 1; q <= b + 1; ++q)
                    for (int pc = 0; pc <= bc; ++pc)
                        for (int qc = pc + 1; qc <= bc + 1; ++qc) {
                            const BenchmarkQuad bm{p, q, qc, pc};
                            if (!state_in_block_set(spec, bm, x)) continue;
                            CHECK(tight.p >= p);
                            CHECK(tight.q <= q);
                            CHECK(tight.q_c <= qc);
                            CHECK(tight.p_c >= pc);
                        }
        }
    }
}
