#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gms/model.hpp"

namespace gms {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

std::string to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::iteration_limit;
    double objective = 0.0;
    FractionalPoint values;       // structural variables only
    int iterations = 0;
    std::vector<int> basis;       // final basic column set of the standard form
    double max_residual = 0.0;    // recomputed against the model after the solve
    double phase1_infeasibility = 0.0;
};

struct SimplexOptions {
    int iteration_limit = 0;      // 0 = 50 * (rows + cols)
    int refactor_period = 100;    // pivots between basis-inverse rebuilds
    std::string dump_path;        // when set, final basis/tableau diagnostics
};

/// Replace the bounds of one variable for a solve, without touching the model.
struct BoundOverride {
    int var = 0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Two-phase bounded-variable primal simplex over the LP relaxation
/// (integrality flags are ignored). Dantzig pricing, Bland's rule after 20
/// consecutive degenerate pivots, ratio-test ties broken by lowest row
/// index, dense basis inverse refactored every refactor_period pivots.
/// Deterministic: identical models yield identical solutions.
LpSolution lp_solve(const MipModel& model, const SimplexOptions& options = {});
LpSolution lp_solve(const MipModel& model, std::span<const BoundOverride> overrides,
                    const SimplexOptions& options = {});

struct ProbeResult {
    bool feasible = false;
    FractionalPoint witness;       // a completing point when feasible
    double infeasibility = 0.0;    // phase-1 objective
};

/// Pins every labeled variable of `fixed` to its value (lower = upper) and
/// solves the phase-1 feasibility LP: either a completing witness exists or
/// the pinned values are certifiably inconsistent with the relaxation.
/// Throws std::invalid_argument when a label is not a model variable.
ProbeResult feasibility_probe(const MipModel& model, const FractionalPoint& fixed);

/// Optimal vertex of the relaxation under a seeded random objective with
/// coefficients uniform on [-1, 1].
LpSolution sample_vertex(const MipModel& model, std::uint64_t seed);

}  // namespace gms
