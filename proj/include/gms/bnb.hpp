#pragma once

#include <string>

#include "gms/instance.hpp"
#include "gms/model.hpp"

namespace gms {

enum class MipStatus { optimal, infeasible, node_limit };

std::string to_string(MipStatus status);

struct MipSolution {
    MipStatus status = MipStatus::infeasible;
    double objective = 0.0;     // incumbent objective (valid unless infeasible)
    FractionalPoint incumbent;  // integral within 1e-6
    double best_bound = 0.0;    // global dual bound at termination
    long nodes = 0;             // LP-solved nodes, root included
    double root_bound = 0.0;    // LP relaxation value before any branching
    bool has_incumbent = false;
};

struct BnbOptions {
    long node_limit = 1'000'000;
    std::string trace_path;     // per-node CSV (id, depth, bound, frac count)
};

/// Best-bound branch-and-bound over lp_solve. Branches on the most
/// fractional binary (ties by lowest variable index); on equal bounds the
/// round-down child is explored first. No cuts, no presolve, so the root
/// bound is exactly the formulation's LP relaxation value.
MipSolution bnb_solve(const MipModel& model, const BnbOptions& options = {});

struct BruteForceResult {
    bool feasible = false;
    double objective = 0.0;
    Schedule schedule;
};

/// Exhaustive enumeration over all start combinations, honoring coupling
/// rows when the instance enables them. Independent of the model builders
/// and solvers. Throws BudgetExceeded past 10^6 combinations.
BruteForceResult brute_force_solve(const Instance& instance);

}  // namespace gms
