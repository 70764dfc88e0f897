#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gms {

/// One maintenance task: a fixed-duration job that must run in consecutive
/// periods somewhere inside the planning horizon.
struct MaintenanceTask {
    std::string id;
    int duration = 1;        // W_m, in periods
    double capacity = 0.0;   // MW taken off the grid while in maintenance
};

/// A GMS problem instance. Periods are labeled 1..horizon; cost is stored
/// period-major (cost[t-1][m]). demand/total_capacity are only meaningful
/// when coupling_enabled is set.
struct Instance {
    int horizon = 0;
    std::vector<MaintenanceTask> tasks;
    std::vector<std::vector<double>> cost;
    std::optional<std::vector<double>> demand;
    std::optional<double> total_capacity;
    bool coupling_enabled = false;

    int num_tasks() const { return static_cast<int>(tasks.size()); }
    double cost_at(int period, int task) const { return cost[period - 1][task]; }
};

/// Start periods keyed by task id. A schedule is feasible w.r.t. the horizon
/// when start + duration - 1 <= horizon for every task.
struct Schedule {
    std::map<std::string, int> start;
};

/// Returns human-readable descriptions of every violated instance invariant;
/// empty means the instance is valid.
std::vector<std::string> validate(const Instance& instance);

struct GenProfile {
    bool coupling = false;
    double demand_base = 100.0;   // mean demand level the sinusoid oscillates around
    double headroom = 1.5;        // capacity margin above the peak greedy load
};

/// Deterministically generates a random instance. Durations are uniform on
/// [1, horizon/2]; costs follow a sinusoidal demand profile so that
/// maintenance is cheapest at demand troughs. When the profile enables
/// coupling, total_capacity is set above the load of a greedy placement, so
/// at least one integer-feasible schedule always exists.
Instance generate(std::uint64_t seed, int horizon, int n_tasks,
                  const GenProfile& profile = {});

/// Cost of running every task over its scheduled window. Throws
/// std::invalid_argument if a start is missing or out of range.
double schedule_cost(const Instance& instance, const Schedule& schedule);

// JSON serialization (schema: {horizon, tasks, cost, demand, total_capacity,
// coupling_enabled}, field order fixed).
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace gms
