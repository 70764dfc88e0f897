#include <doctest.h>

#include <sstream>

#include "gms/analysis.hpp"
#include "gms/formulations.hpp"
#include "gms/model.hpp"
#include "support.hpp"

using namespace gms;

TEST_CASE("relax clears integrality and nothing else") {
    const Instance instance = testsupport::tiny_instance(4, 2, {1, 1, 1, 1});
    const MipModel model = build(FormulationId::F1, instance);
    const MipModel relaxed = relax(model);

    REQUIRE(relaxed.num_vars() == model.num_vars());
    for (int j = 0; j < relaxed.num_vars(); ++j) {
        CHECK(!relaxed.variables[j].integral);
        CHECK(relaxed.variables[j].lower == model.variables[j].lower);
        CHECK(relaxed.variables[j].upper == model.variables[j].upper);
    }
    REQUIRE(relaxed.num_rows() == model.num_rows());
    for (int r = 0; r < relaxed.num_rows(); ++r) {
        CHECK(relaxed.rows[r].terms == model.rows[r].terms);
        CHECK(relaxed.rows[r].rhs == model.rows[r].rhs);
    }
    CHECK(relaxed.objective == model.objective);

    const MipModel twice = relax(relaxed);
    for (int j = 0; j < twice.num_vars(); ++j) CHECK(!twice.variables[j].integral);
}

TEST_CASE("residuals reproduce the first counterexample row values") {
    const Instance instance = counterexample1_instance();
    const FractionalPoint point = counterexample1_point(instance);

    const MipModel f1 = build(FormulationId::F1, instance);
    const auto on_f1 = residuals(f1, point);
    CHECK(on_f1.max_violation() <= 1e-12);

    const MipModel f7 = build(FormulationId::F7, instance);
    const auto on_f7 = residuals(f7, point);
    CHECK(on_f7.violation_of(f7, "7b[t=2,m=m1]") == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(on_f7.violation_of(f7, "7b[t=3,m=m1]") == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(on_f7.max_row_violation == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(on_f7.worst_tag.rfind("7b", 0) == 0);
}

TEST_CASE("residuals of the empty point break both cardinality rows") {
    const Instance instance = counterexample1_instance();
    const MipModel f1 = build(FormulationId::F1, instance);
    const auto report = residuals(f1, FractionalPoint{});
    CHECK(report.violation_of(f1, "1a[m=m1]") == doctest::Approx(2.0));
    CHECK(report.violation_of(f1, "1b[m=m1]") == doctest::Approx(1.0));
}

TEST_CASE("residuals report bound violations separately") {
    const Instance instance = counterexample1_instance();
    const MipModel f6 = build(FormulationId::F6, instance);
    FractionalPoint point;
    point.set("S_1_m1", 1.0);
    point.set("S_4_m1", 0.5);  // upper bound is 0: start would overrun the horizon
    const auto report = residuals(f6, point);
    REQUIRE(report.bound_violations.size() == 1);
    CHECK(report.bound_violations[0].first == "S_4_m1");
    CHECK(report.bound_violations[0].second == doctest::Approx(0.5));
}

TEST_CASE("LP export carries all sections and tagged rows") {
    const Instance instance = testsupport::tiny_instance(4, 2, {3, 1, 2, 5});
    const MipModel model = build(FormulationId::F7, instance);
    const std::string text = to_lp_string(model);

    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("Bounds") != std::string::npos);
    CHECK(text.find("Binaries") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
    CHECK(text.find("7a_m_m1") != std::string::npos);
    CHECK(text.find("7b_t_2_m_m1") != std::string::npos);
    CHECK(text.find("S_4_m1 = 0") != std::string::npos);  // tail fixing as a bound

    const std::string relaxed = to_lp_string(relax(model));
    CHECK(relaxed.find("Binaries") == std::string::npos);
}

TEST_CASE("dense/point conversions are inverse of each other") {
    const Instance instance = generate(3, 8, 2);
    const MipModel model = build(FormulationId::F4, instance);
    std::vector<double> values(model.num_vars());
    for (int j = 0; j < model.num_vars(); ++j) values[j] = j * 0.01;
    const FractionalPoint point = point_from_dense(model, values);
    CHECK(dense_values(model, point) == values);
}
