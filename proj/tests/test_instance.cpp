#include <doctest.h>

#include <algorithm>

#include "gms/instance.hpp"
#include "support.hpp"

using namespace gms;

TEST_CASE("validate accepts a well-formed instance") {
    const Instance instance = testsupport::tiny_instance(4, 2, {1, 1, 1, 1});
    CHECK(validate(instance).empty());
}

TEST_CASE("validate flags a duration exceeding the horizon") {
    const Instance instance = testsupport::tiny_instance(4, 5, {1, 1, 1, 1});
    const auto violations = validate(instance);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("duration exceeds horizon") != std::string::npos);
}

TEST_CASE("validate flags demand length mismatch under coupling") {
    Instance instance = testsupport::tiny_instance(4, 2, {1, 1, 1, 1});
    instance.coupling_enabled = true;
    instance.demand = std::vector<double>{1, 2, 3};
    instance.total_capacity = 100.0;
    const auto violations = validate(instance);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("demand length mismatch") != std::string::npos);
}

TEST_CASE("generate is deterministic and seed-sensitive") {
    const Instance a = generate(1, 12, 2);
    const Instance b = generate(1, 12, 2);
    CHECK(instance_to_json(a) == instance_to_json(b));

    const Instance c = generate(2, 12, 2);
    bool differs = instance_to_json(a) != instance_to_json(c);
    CHECK(differs);
}

TEST_CASE("generated instances always validate") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenProfile profile;
        profile.coupling = seed % 2 == 0;
        const Instance instance =
            generate(seed, 4 + static_cast<int>(seed % 23), 1 + static_cast<int>(seed % 5),
                     profile);
        CAPTURE(seed);
        CHECK(validate(instance).empty());
        for (const auto& task : instance.tasks)
            CHECK(task.duration <= std::max(1, instance.horizon / 2));
    }
}

TEST_CASE("schedule_cost sums the scheduled window") {
    Schedule schedule;
    schedule.start["m1"] = 1;
    CHECK(schedule_cost(testsupport::tiny_instance(4, 2, {1, 1, 1, 1}), schedule) ==
          doctest::Approx(2.0));
    schedule.start["m1"] = 2;
    CHECK(schedule_cost(testsupport::tiny_instance(4, 2, {3, 1, 2, 5}), schedule) ==
          doctest::Approx(3.0));
}

TEST_CASE("schedule_cost rejects out-of-range starts") {
    const Instance instance = testsupport::tiny_instance(4, 2, {1, 1, 1, 1});
    Schedule schedule;
    schedule.start["m1"] = 4;  // would end at period 5
    CHECK_THROWS_AS(schedule_cost(instance, schedule), std::invalid_argument);
    schedule.start["m1"] = 0;
    CHECK_THROWS_AS(schedule_cost(instance, schedule), std::invalid_argument);
}

TEST_CASE("schedule_cost is invariant under task reordering") {
    Instance instance = generate(7, 10, 3);
    Schedule schedule;
    for (int m = 0; m < instance.num_tasks(); ++m)
        schedule.start[instance.tasks[m].id] = 1 + m;
    const double before = schedule_cost(instance, schedule);

    Instance shuffled = instance;
    std::reverse(shuffled.tasks.begin(), shuffled.tasks.end());
    for (auto& row : shuffled.cost) std::reverse(row.begin(), row.end());
    CHECK(schedule_cost(shuffled, schedule) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("instance JSON round trip is byte-identical") {
    GenProfile coupled;
    coupled.coupling = true;
    for (std::uint64_t seed : {1ull, 9ull, 42ull}) {
        const Instance instance = generate(seed, 14, 3, coupled);
        const std::string once = instance_to_json(instance);
        const std::string twice = instance_to_json(instance_from_json(once));
        CHECK(once == twice);
    }
}

TEST_CASE("coupled generation leaves room for at least one schedule") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenProfile profile;
        profile.coupling = true;
        const Instance instance = generate(seed, 12, 3, profile);
        REQUIRE(instance.total_capacity.has_value());
        const double peak =
            *std::max_element(instance.demand->begin(), instance.demand->end());
        CHECK(*instance.total_capacity > peak);
    }
}
