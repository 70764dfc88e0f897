#include <doctest.h>

#include <json.hpp>

#include "gms/analysis.hpp"
#include "gms/serialize.hpp"
#include "support.hpp"

using namespace gms;

TEST_CASE("compare declares F7 strictly tighter than F1 given the witness") {
    const Instance instance = counterexample1_instance();
    const FractionalPoint witness = counterexample1_point(instance);
    const auto verdict = compare(FormulationId::F7, FormulationId::F1, instance, 40, 3,
                                 std::span(&witness, 1));
    CHECK(verdict.verdict == Verdict::a_strictly_tighter);
    REQUIRE(!verdict.witnesses.empty());
    bool injected_seen = false;
    for (const auto& w : verdict.witnesses)
        injected_seen |= w.direction == "in_B_not_A" &&
                         w.point.get("S_1_m1") == doctest::Approx(2.0 / 3);
    CHECK(injected_seen);
    CHECK(verdict.bound_gap >= -1e-9);
}

TEST_CASE("compare declares the equivalent pairs equivalent") {
    const Instance instance = generate(5, 10, 2, GenProfile{.coupling = true});
    for (auto [a, b] : {std::pair{FormulationId::F7, FormulationId::F4},
                        {FormulationId::F6, FormulationId::F7},
                        {FormulationId::F6, FormulationId::F4}}) {
        const auto verdict = compare(a, b, instance, 30, 7);
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CHECK(verdict.verdict == Verdict::equivalent);
        CHECK(verdict.witnesses.empty());
        CHECK(std::abs(verdict.bound_gap) <= 1e-6);
    }
}

TEST_CASE("compare records the F2-over-F3 bound dominance") {
    const Instance instance = generate(8, 12, 3, GenProfile{.coupling = true});
    const auto verdict = compare(FormulationId::F2, FormulationId::F3, instance, 30, 11);
    CHECK(verdict.bound_gap >= -1e-6);
    // F2's rows are a superset of F3's, so no F2 vertex may separate.
    for (const auto& witness : verdict.witnesses)
        CHECK(witness.direction == "in_B_not_A");
}

TEST_CASE("compare of a formulation with itself is equivalent") {
    const Instance instance = generate(2, 8, 2);
    const auto verdict = compare(FormulationId::F5, FormulationId::F5, instance, 10, 1);
    CHECK(verdict.verdict == Verdict::equivalent);
}

TEST_CASE("lemma reports pass on seeded instances") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        GenProfile profile;
        profile.coupling = seed % 2 == 0;
        const Instance instance = generate(seed, 10 + 2 * static_cast<int>(seed), 2, profile);
        const auto l1 = verify_lemma1(instance, 50, seed);
        CAPTURE(seed);
        CHECK(l1.pass);
        CHECK(l1.points_checked == 50);
        CHECK(l1.max_deviation <= 1e-6);
        const auto l2 = verify_lemma2(instance, 50, seed);
        CHECK(l2.pass);
        CHECK(l2.max_deviation <= 1e-6);
    }
}

TEST_CASE("the ten-period execution pattern satisfies the rise inequality") {
    const Instance instance = counterexample2_instance();
    const FractionalPoint point = counterexample2_point(instance);
    // Deviation of the lemma expression on this explicit point, out-of-horizon
    // terms zero.
    double worst = -1.0;
    auto x_at = [&](int t) {
        return t < 1 || t > 10 ? 0.0 : point.get("X_" + std::to_string(t) + "_m1");
    };
    for (int t = 1; t <= 10; ++t)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, x_at(t) - x_at(t - 1) - x_at(t + j));
    CHECK(worst <= 1e-6);
}

TEST_CASE("verify_paper passes end to end and reports every relation") {
    const PaperReport report = verify_paper(1);
    for (const auto& check : report.checks) {
        CAPTURE(check.name);
        CAPTURE(check.measured);
        CHECK(check.pass);
    }
    CHECK(report.all_pass());

    const char* required[] = {
        "F7_tighter_than_F1/counterexample_feasible_in_F1",
        "F7_tighter_than_F1/counterexample_infeasible_in_F7",
        "F7_tighter_than_F1/sampled_vertices_satisfy_F1",
        "F6_tighter_than_F1/counterexample_infeasible_in_F6",
        "F7_tighter_than_F2/counterexample_feasible_in_F2",
        "F7_tighter_than_F2/counterexample_infeasible_in_F7",
        "F6_tighter_than_F2/counterexample_infeasible_in_F6",
        "F7_tighter_than_F3/counterexample_feasible_in_F3",
        "F6_tighter_than_F3/counterexample_infeasible_in_F6",
        "F7_equivalent_to_F4/cross_feasible_sampled",
        "F6_equivalent_to_F4/cross_feasible_sampled",
        "F7_tighter_than_F5/counterexample_feasible_in_F5",
        "F7_tighter_than_F5/start_row_saturated_at_t1",
        "F6_tighter_than_F5/counterexample_infeasible_in_F6",
        "lemma_execution_mass/max_deviation",
        "lemma_rise_bound/max_deviation",
        "bound_ordering/F6_F7_F4_equal",
        "bound_ordering/tightest_dominates_F1_F2_F3_F5",
        "bound_ordering/F2_dominates_F3",
    };
    for (const char* name : required) {
        bool found = false;
        for (const auto& check : report.checks) found |= check.name == name;
        CAPTURE(name);
        CHECK(found);
    }
}

TEST_CASE("report serialization is machine readable") {
    PaperReport report;
    report.seed = 9;
    report.checks.push_back({"sample/check", true, 0.5, "detail"});
    const auto parsed = nlohmann::json::parse(report_to_json(report));
    CHECK(parsed["all_pass"] == true);
    CHECK(parsed["checks"][0]["name"] == "sample/check");
    CHECK(report_to_text(report).find("PASS") != std::string::npos);
}

TEST_CASE("witness files parse into points") {
    const auto points =
        witnesses_from_json(R"([{"X_1_m1": 0.5, "S_1_m1": 0.25}, {"X_2_m1": 1.0}])");
    REQUIRE(points.size() == 2);
    CHECK(points[0].get("X_1_m1") == doctest::Approx(0.5));
    CHECK(points[1].get("X_2_m1") == doctest::Approx(1.0));
}
