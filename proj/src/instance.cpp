#include "gms/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gms {

namespace {

constexpr double kPi = 3.14159265358979323846;

double round4(double x) { return std::round(x * 1e4) / 1e4; }

// Thin deterministic wrappers over mt19937_64 raw output, so generated
// instances do not depend on the standard library's distribution internals.
double rand01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng() % span);
}

}  // namespace

std::vector<std::string> validate(const Instance& instance) {
    std::vector<std::string> violations;
    if (instance.horizon < 1)
        violations.push_back("horizon: must be a positive period count");
    if (instance.tasks.empty())
        violations.push_back("tasks: at least one maintenance task is required");
    for (const auto& task : instance.tasks) {
        if (task.duration < 1)
            violations.push_back("tasks[" + task.id + "].duration: must be >= 1");
        else if (task.duration > instance.horizon)
            violations.push_back("tasks[" + task.id + "].duration: duration exceeds horizon");
        if (task.capacity < 0)
            violations.push_back("tasks[" + task.id + "].capacity: must be nonnegative");
    }
    if (instance.cost.size() != static_cast<std::size_t>(instance.horizon)) {
        violations.push_back("cost: expected one row per period (" +
                             std::to_string(instance.horizon) + ")");
    } else {
        for (const auto& row : instance.cost)
            if (row.size() != instance.tasks.size()) {
                violations.push_back("cost: row length mismatch, expected one entry per task");
                break;
            }
    }
    if (instance.coupling_enabled) {
        if (!instance.demand ||
            instance.demand->size() != static_cast<std::size_t>(instance.horizon)) {
            violations.push_back("demand: demand length mismatch with horizon");
        }
        if (!instance.total_capacity) {
            violations.push_back("total_capacity: required when coupling is enabled");
        } else if (instance.demand &&
                   instance.demand->size() == static_cast<std::size_t>(instance.horizon)) {
            const double peak = *std::max_element(instance.demand->begin(),
                                                  instance.demand->end());
            if (*instance.total_capacity <= peak)
                violations.push_back("total_capacity: must exceed peak demand");
        }
    }
    return violations;
}

Instance generate(std::uint64_t seed, int horizon, int n_tasks, const GenProfile& profile) {
    if (horizon < 2) throw std::invalid_argument("generate: horizon must be >= 2");
    if (n_tasks < 1) throw std::invalid_argument("generate: n_tasks must be >= 1");

    std::mt19937_64 rng(seed);
    Instance instance;
    instance.horizon = horizon;
    instance.coupling_enabled = profile.coupling;

    const int max_duration = std::max(1, horizon / 2);
    for (int m = 0; m < n_tasks; ++m) {
        MaintenanceTask task;
        task.id = "m" + std::to_string(m + 1);
        task.duration = rand_int(rng, 1, max_duration);
        instance.tasks.push_back(std::move(task));
    }

    const double base = profile.demand_base;
    const double amplitude = 20.0 + 20.0 * rand01(rng);
    const double phase = 2.0 * kPi * rand01(rng);
    std::vector<double> demand(horizon);
    for (int t = 0; t < horizon; ++t)
        demand[t] = round4(base + amplitude * std::sin(2.0 * kPi * t / horizon + phase));

    // Cost tracks the demand profile plus task-specific scale and jitter, so
    // the cheap periods sit at the demand troughs.
    std::vector<double> scale(n_tasks);
    for (int m = 0; m < n_tasks; ++m) scale[m] = 0.8 + 0.4 * rand01(rng);
    instance.cost.assign(horizon, std::vector<double>(n_tasks));
    for (int t = 0; t < horizon; ++t)
        for (int m = 0; m < n_tasks; ++m)
            instance.cost[t][m] =
                round4(0.05 + scale[m] * (demand[t] / base) + 0.1 * rand01(rng));

    for (int m = 0; m < n_tasks; ++m)
        instance.tasks[m].capacity = round4(20.0 + 40.0 * rand01(rng));

    if (profile.coupling) {
        // Place tasks greedily (longest first) to minimize the peak of
        // demand + maintenance load, then grant capacity headroom above that
        // peak: the greedy schedule stays integer feasible while tighter
        // placements can still hit the capacity rows.
        std::vector<int> order(n_tasks);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return instance.tasks[a].duration > instance.tasks[b].duration;
        });
        std::vector<double> load(horizon, 0.0);
        for (int m : order) {
            const int duration = instance.tasks[m].duration;
            const double cap = instance.tasks[m].capacity;
            int best_start = 1;
            double best_peak = std::numeric_limits<double>::infinity();
            for (int s = 1; s + duration - 1 <= horizon; ++s) {
                double peak = 0.0;
                for (int t = s; t <= s + duration - 1; ++t)
                    peak = std::max(peak, demand[t - 1] + load[t - 1] + cap);
                if (peak < best_peak) {
                    best_peak = peak;
                    best_start = s;
                }
            }
            for (int t = best_start; t <= best_start + duration - 1; ++t)
                load[t - 1] += cap;
        }
        double peak = 0.0;
        for (int t = 0; t < horizon; ++t) peak = std::max(peak, demand[t] + load[t]);
        instance.demand = demand;
        instance.total_capacity = round4(peak + profile.headroom);
    }

    return instance;
}

double schedule_cost(const Instance& instance, const Schedule& schedule) {
    double total = 0.0;
    for (int m = 0; m < instance.num_tasks(); ++m) {
        const auto& task = instance.tasks[m];
        auto it = schedule.start.find(task.id);
        if (it == schedule.start.end())
            throw std::invalid_argument("schedule_cost: no start for task " + task.id);
        const int start = it->second;
        if (start < 1 || start + task.duration - 1 > instance.horizon)
            throw std::invalid_argument("schedule_cost: start out of range for task " +
                                        task.id);
        for (int t = start; t <= start + task.duration - 1; ++t)
            total += instance.cost_at(t, m);
    }
    return total;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json instance_json(const Instance& instance) {
    ordered_json j;
    j["horizon"] = instance.horizon;
    ordered_json tasks = ordered_json::array();
    for (const auto& task : instance.tasks) {
        ordered_json t;
        t["id"] = task.id;
        t["duration"] = task.duration;
        t["capacity"] = task.capacity;
        tasks.push_back(std::move(t));
    }
    j["tasks"] = std::move(tasks);
    j["cost"] = instance.cost;
    if (instance.demand)
        j["demand"] = *instance.demand;
    else
        j["demand"] = nullptr;
    if (instance.total_capacity)
        j["total_capacity"] = *instance.total_capacity;
    else
        j["total_capacity"] = nullptr;
    j["coupling_enabled"] = instance.coupling_enabled;
    return j;
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
    return instance_json(instance).dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Instance instance;
    instance.horizon = j.at("horizon").get<int>();
    for (const auto& t : j.at("tasks")) {
        MaintenanceTask task;
        task.id = t.at("id").get<std::string>();
        task.duration = t.at("duration").get<int>();
        task.capacity = t.value("capacity", 0.0);
        instance.tasks.push_back(std::move(task));
    }
    instance.cost = j.at("cost").get<std::vector<std::vector<double>>>();
    if (j.contains("demand") && !j.at("demand").is_null())
        instance.demand = j.at("demand").get<std::vector<double>>();
    if (j.contains("total_capacity") && !j.at("total_capacity").is_null())
        instance.total_capacity = j.at("total_capacity").get<double>();
    instance.coupling_enabled = j.value("coupling_enabled", false);
    return instance;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return instance_from_json(buffer.str());
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("failed to parse " + path + ": " + e.what());
    }
}

void save_instance(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << instance_to_json(instance);
}

}  // namespace gms
