#include "gms/bnb.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "gms/formulations.hpp"
#include "gms/simplex.hpp"

namespace gms {

std::string to_string(MipStatus status) {
    switch (status) {
        case MipStatus::optimal: return "optimal";
        case MipStatus::infeasible: return "infeasible";
        case MipStatus::node_limit: return "node-limit";
    }
    return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPruneMargin = 1e-7;

struct Node {
    long id = 0;
    long parent = -1;
    int depth = 0;
    int branch_var = -1;
    bool branch_up = false;  // false: var <= 0, true: var >= 1
    double bound = -kInf;    // parent LP bound until solved
};

struct QueueOrder {
    // Best bound first; on ties the earlier node (the round-down child,
    // which is created first) is explored first.
    bool operator()(const std::pair<double, long>& a,
                    const std::pair<double, long>& b) const {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    }
};

int most_fractional(const MipModel& model, const std::vector<double>& values) {
    int best = -1;
    double best_distance = kIntegralityTol;
    for (int j = 0; j < model.num_vars(); ++j) {
        if (!model.variables[j].integral) continue;
        const double distance = std::abs(values[j] - std::round(values[j]));
        if (distance > best_distance) {
            best_distance = distance;
            best = j;
        }
    }
    return best;
}

}  // namespace

MipSolution bnb_solve(const MipModel& model, const BnbOptions& options) {
    std::vector<Node> nodes;
    std::priority_queue<std::pair<double, long>, std::vector<std::pair<double, long>>,
                        QueueOrder>
        open;
    std::ofstream trace;
    if (!options.trace_path.empty()) {
        trace.open(options.trace_path);
        trace << "node,depth,bound,fractional\n";
    }

    MipSolution solution;
    double incumbent_obj = kInf;

    nodes.push_back(Node{});
    open.emplace(-kInf, 0);

    std::vector<BoundOverride> overrides;
    long solved = 0;

    while (!open.empty()) {
        const auto [queued_bound, id] = open.top();
        open.pop();
        if (queued_bound >= incumbent_obj - kPruneMargin) continue;

        if (solved >= options.node_limit) {
            // Report the tightest still-valid dual bound.
            double best_bound = std::min(queued_bound, incumbent_obj);
            auto rest = open;
            while (!rest.empty()) {
                best_bound = std::min(best_bound, rest.top().first);
                rest.pop();
            }
            solution.status = MipStatus::node_limit;
            solution.best_bound = std::max(best_bound, solution.root_bound);
            solution.nodes = solved;
            solution.objective = incumbent_obj;
            return solution;
        }

        // Collect branching decisions along the path to the root.
        overrides.clear();
        for (long walk = id; walk > 0; walk = nodes[walk].parent) {
            const Node& node = nodes[walk];
            if (node.branch_up)
                overrides.push_back({node.branch_var, 1.0, 1.0});
            else
                overrides.push_back({node.branch_var, 0.0, 0.0});
        }

        const LpSolution lp = lp_solve(model, overrides);
        ++solved;
        if (id == 0) {
            solution.root_bound = lp.status == LpStatus::optimal ? lp.objective : kInf;
            if (lp.status == LpStatus::infeasible) {
                solution.status = MipStatus::infeasible;
                solution.nodes = solved;
                return solution;
            }
        }
        if (lp.status == LpStatus::infeasible) continue;
        if (lp.status != LpStatus::optimal)
            throw std::runtime_error("bnb_solve: node LP " + to_string(lp.status));

        const double bound = lp.objective;
        nodes[id].bound = bound;
        if (bound >= incumbent_obj - kPruneMargin) continue;

        const std::vector<double> values = dense_values(model, lp.values);
        const int branch_var = most_fractional(model, values);
        if (trace.is_open()) {
            int fractional = 0;
            for (int j = 0; j < model.num_vars(); ++j)
                if (model.variables[j].integral &&
                    std::abs(values[j] - std::round(values[j])) > kIntegralityTol)
                    ++fractional;
            trace << id << "," << nodes[id].depth << "," << bound << "," << fractional
                  << "\n";
        }

        if (branch_var < 0) {
            // Integral LP optimum: new incumbent.
            if (bound < incumbent_obj) {
                incumbent_obj = bound;
                solution.incumbent = lp.values;
                solution.has_incumbent = true;
            }
            continue;
        }

        for (const bool up : {false, true}) {
            Node child;
            child.id = static_cast<long>(nodes.size());
            child.parent = id;
            child.depth = nodes[id].depth + 1;
            child.branch_var = branch_var;
            child.branch_up = up;
            child.bound = bound;
            open.emplace(bound, child.id);
            nodes.push_back(child);
        }
    }

    solution.nodes = solved;
    if (!solution.has_incumbent) {
        solution.status = MipStatus::infeasible;
        return solution;
    }
    solution.status = MipStatus::optimal;
    solution.objective = incumbent_obj;
    solution.best_bound = incumbent_obj;
    return solution;
}

BruteForceResult brute_force_solve(const Instance& instance) {
    const auto violations = validate(instance);
    if (!violations.empty())
        throw std::invalid_argument("brute_force_solve: invalid instance: " +
                                    violations.front());
    if (enumeration_size(instance) > 1'000'000)
        throw BudgetExceeded("brute_force_solve: more than 10^6 start combinations");

    const int n_tasks = instance.num_tasks();
    const int horizon = instance.horizon;
    std::vector<int> starts(n_tasks, 1);
    std::vector<int> last(n_tasks);
    for (int m = 0; m < n_tasks; ++m)
        last[m] = horizon - instance.tasks[m].duration + 1;

    BruteForceResult result;
    result.objective = kInf;
    std::vector<double> load(horizon);

    while (true) {
        bool feasible = true;
        if (instance.coupling_enabled) {
            std::fill(load.begin(), load.end(), 0.0);
            for (int m = 0; m < n_tasks; ++m)
                for (int t = starts[m]; t <= starts[m] + instance.tasks[m].duration - 1; ++t)
                    load[t - 1] += instance.tasks[m].capacity;
            for (int t = 0; t < horizon && feasible; ++t)
                feasible = load[t] <= *instance.total_capacity - (*instance.demand)[t];
        }
        if (feasible) {
            double cost = 0.0;
            for (int m = 0; m < n_tasks; ++m)
                for (int t = starts[m]; t <= starts[m] + instance.tasks[m].duration - 1; ++t)
                    cost += instance.cost_at(t, m);
            if (cost < result.objective) {
                result.feasible = true;
                result.objective = cost;
                result.schedule.start.clear();
                for (int m = 0; m < n_tasks; ++m)
                    result.schedule.start[instance.tasks[m].id] = starts[m];
            }
        }

        int m = n_tasks - 1;
        while (m >= 0 && starts[m] == last[m]) starts[m--] = 1;
        if (m < 0) break;
        ++starts[m];
    }
    return result;
}

}  // namespace gms
