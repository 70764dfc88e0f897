#include <doctest.h>

#include <cmath>

#include "gms/analysis.hpp"
#include "gms/formulations.hpp"
#include "gms/serialize.hpp"
#include "gms/simplex.hpp"
#include "support.hpp"

using namespace gms;

TEST_CASE("lp_solve agrees with the active-set oracle on random tiny models") {
    int feasible_seen = 0, infeasible_seen = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const MipModel model = testsupport::random_model(seed, 4, 4);
        const auto oracle = testsupport::lp_oracle(model);
        const LpSolution solution = lp_solve(model);
        CAPTURE(seed);
        if (oracle.feasible) {
            ++feasible_seen;
            REQUIRE(solution.status == LpStatus::optimal);
            CHECK(solution.objective ==
                  doctest::Approx(oracle.objective).epsilon(1e-7).scale(1.0));
            CHECK(solution.max_residual <= 1e-7);
        } else {
            ++infeasible_seen;
            CHECK(solution.status == LpStatus::infeasible);
        }
    }
    // The generator must exercise both outcomes for this test to mean much.
    CHECK(feasible_seen > 10);
    CHECK(infeasible_seen > 5);
}

TEST_CASE("start-only relaxation picks the cheapest window") {
    const Instance instance = testsupport::tiny_instance(4, 2, {3, 1, 2, 5});
    const LpSolution f6 = lp_solve(build(FormulationId::F6, instance));
    REQUIRE(f6.status == LpStatus::optimal);
    CHECK(f6.objective == doctest::Approx(3.0).epsilon(1e-9));  // start at 2: 1 + 2

    const LpSolution f7 = lp_solve(build(FormulationId::F7, instance));
    REQUIRE(f7.status == LpStatus::optimal);
    CHECK(f7.objective == doctest::Approx(f6.objective).epsilon(1e-9));
}

TEST_CASE("contradictory cardinality rows are infeasible") {
    const Instance instance = testsupport::tiny_instance(4, 2, {1, 1, 1, 1});
    MipModel model = build(FormulationId::F6, instance);
    ConstraintRow zero;
    for (int j = 0; j < model.num_vars(); ++j) zero.terms.emplace_back(j, 1.0);
    zero.sense = 'E';
    zero.rhs = 0.0;
    zero.tag = "conflict";
    model.rows.push_back(zero);
    CHECK(lp_solve(model).status == LpStatus::infeasible);
}

TEST_CASE("feasibility probe reconstructs starts from integral execution") {
    const Instance instance = testsupport::tiny_instance(4, 2, {1, 1, 1, 1});
    const MipModel f7 = build(FormulationId::F7, instance);
    FractionalPoint fixed;
    fixed.set("X_1_m1", 0.0);
    fixed.set("X_2_m1", 1.0);
    fixed.set("X_3_m1", 1.0);
    fixed.set("X_4_m1", 0.0);
    const auto probe = feasibility_probe(f7, fixed);
    REQUIRE(probe.feasible);
    CHECK(probe.witness.get("S_2_m1") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(probe.witness.get("S_1_m1") == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(probe.witness.get("S_3_m1") == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
}

TEST_CASE("probing the printed counterexamples") {
    SUBCASE("full start/execution pin is infeasible") {
        const Instance instance = counterexample1_instance();
        const MipModel f7 = build(FormulationId::F7, instance);
        const auto probe = feasibility_probe(f7, counterexample1_point(instance));
        CHECK(!probe.feasible);
        CHECK(probe.infeasibility > 1e-3);
    }
    SUBCASE("the execution part alone still extends") {
        const Instance instance = counterexample1_instance();
        const MipModel f7 = build(FormulationId::F7, instance);
        FractionalPoint x_only;
        for (const auto& [label, value] : counterexample1_point(instance).values)
            if (label.rfind("X_", 0) == 0) x_only.set(label, value);
        const auto probe = feasibility_probe(f7, x_only);
        REQUIRE(probe.feasible);
        // Forward substitution pins S uniquely: (1/3, 1/3, 1/3, 0).
        CHECK(probe.witness.get("S_1_m1") == doctest::Approx(1.0 / 3).epsilon(1e-7));
        CHECK(probe.witness.get("S_2_m1") == doctest::Approx(1.0 / 3).epsilon(1e-7));
        CHECK(probe.witness.get("S_3_m1") == doctest::Approx(1.0 / 3).epsilon(1e-7));
    }
    SUBCASE("the ten-period execution pattern has no start assignment") {
        const Instance instance = counterexample2_instance();
        const MipModel f7 = build(FormulationId::F7, instance);
        const auto probe = feasibility_probe(f7, counterexample2_point(instance));
        CHECK(!probe.feasible);
    }
}

TEST_CASE("probe rejects values outside variable bounds") {
    const Instance instance = testsupport::tiny_instance(4, 2, {1, 1, 1, 1});
    const MipModel f7 = build(FormulationId::F7, instance);
    FractionalPoint fixed;
    fixed.set("S_4_m1", 0.5);  // tail-fixed start
    CHECK(!feasibility_probe(f7, fixed).feasible);

    FractionalPoint unknown;
    unknown.set("Z_1_m1", 0.5);
    CHECK_THROWS_AS(feasibility_probe(f7, unknown), std::invalid_argument);
}

TEST_CASE("sample_vertex is deterministic and feasible") {
    const Instance instance = generate(4, 10, 2, GenProfile{.coupling = true});
    const MipModel model = build(FormulationId::F7, instance);
    const LpSolution a = sample_vertex(model, 17);
    const LpSolution b = sample_vertex(model, 17);
    CHECK(lp_solution_to_json(a) == lp_solution_to_json(b));
    CHECK(a.max_residual <= 1e-6);

    const LpSolution c = sample_vertex(model, 18);
    CHECK(c.max_residual <= 1e-6);
}

TEST_CASE("every sampled vertex of the start simplex is integral") {
    const Instance instance = testsupport::tiny_instance(6, 3, {2, 1, 1, 2, 3, 1});
    const MipModel model = build(FormulationId::F6, instance);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const LpSolution vertex = sample_vertex(model, seed);
        REQUIRE(vertex.status == LpStatus::optimal);
        for (const auto& [label, value] : vertex.values.values) {
            CAPTURE(seed);
            CAPTURE(label);
            CHECK(std::abs(value - std::round(value)) <= 1e-9);
        }
    }
}

TEST_CASE("reported optima lower-bound every feasible schedule") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        GenProfile profile;
        profile.coupling = seed % 2 == 0;
        const Instance instance = generate(seed, 8, 2, profile);
        for (FormulationId id : kAllFormulations) {
            const LpSolution lp = lp_solve(build(id, instance));
            REQUIRE(lp.status == LpStatus::optimal);
            for (const auto& schedule : integer_feasible_set(id, instance)) {
                CAPTURE(seed);
                CAPTURE(to_string(id));
                CHECK(schedule_cost(instance, schedule) >= lp.objective - 1e-6);
            }
        }
    }
}

TEST_CASE("identical models solve to identical bytes") {
    const Instance instance = generate(23, 16, 3, GenProfile{.coupling = true});
    const MipModel model = build(FormulationId::F2, instance);
    const LpSolution a = lp_solve(model);
    const LpSolution b = lp_solve(model);
    CHECK(lp_solution_to_json(a) == lp_solution_to_json(b));
    CHECK(a.basis == b.basis);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("solver feasible points satisfy the model within tolerance") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Instance instance = generate(seed, 14, 3, GenProfile{.coupling = true});
        for (FormulationId id : {FormulationId::F2, FormulationId::F5, FormulationId::F7}) {
            const MipModel model = build(id, instance);
            const LpSolution lp = lp_solve(model);
            REQUIRE(lp.status == LpStatus::optimal);
            CHECK(residuals(model, lp.values).max_violation() <= 1e-6);
        }
    }
}
