#pragma once

// Test-only oracles, independent of the library's solve paths: a dense
// active-set enumerator for tiny LPs and a few instance helpers.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "gms/instance.hpp"
#include "gms/model.hpp"

namespace testsupport {

inline gms::Instance tiny_instance(int horizon, int duration,
                                   const std::vector<double>& costs) {
    gms::Instance instance;
    instance.horizon = horizon;
    instance.tasks.push_back({"m1", duration, 0.0});
    for (double c : costs) instance.cost.push_back({c});
    return instance;
}

// Solves a dense linear system via Gauss-Jordan with partial pivoting.
// Returns nullopt when singular.
inline std::optional<std::vector<double>> solve_dense(std::vector<std::vector<double>> a,
                                                      std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
        if (std::abs(a[pivot][k]) < 1e-11) return std::nullopt;
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        const double inv = 1.0 / a[k][k];
        for (int j = 0; j < n; ++j) a[k][j] *= inv;
        b[k] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = a[i][k];
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    return b;
}

struct OracleResult {
    bool feasible = false;
    double objective = std::numeric_limits<double>::infinity();
    std::vector<double> minimizer;
};

// Brute-force LP optimum: enumerate every choice of n active constraints
// (rows as equalities plus variable bounds), solve the square system, keep
// feasible solutions. Assumes all variables are box-bounded so the optimum
// sits at such a basic point.
inline OracleResult lp_oracle(const gms::MipModel& model) {
    const int n = model.num_vars();
    struct Plane {
        std::vector<double> coeffs;
        double rhs;
    };
    std::vector<Plane> planes;
    for (const auto& row : model.rows) {
        Plane plane{std::vector<double>(n, 0.0), row.rhs};
        for (const auto& [var, coeff] : row.terms) plane.coeffs[var] = coeff;
        planes.push_back(std::move(plane));
    }
    for (int j = 0; j < n; ++j) {
        Plane lower{std::vector<double>(n, 0.0), model.variables[j].lower};
        lower.coeffs[j] = 1.0;
        planes.push_back(lower);
        Plane upper{std::vector<double>(n, 0.0), model.variables[j].upper};
        upper.coeffs[j] = 1.0;
        planes.push_back(std::move(upper));
    }

    std::vector<double> objective(n, 0.0);
    for (const auto& [var, coeff] : model.objective) objective[var] = coeff;

    OracleResult result;
    const int total = static_cast<int>(planes.size());
    std::vector<int> pick(n);
    auto feasible_at = [&](const std::vector<double>& x) {
        for (int j = 0; j < n; ++j)
            if (x[j] < model.variables[j].lower - 1e-7 ||
                x[j] > model.variables[j].upper + 1e-7)
                return false;
        for (const auto& row : model.rows) {
            double activity = 0.0;
            for (const auto& [var, coeff] : row.terms) activity += coeff * x[var];
            if (row.sense == 'L' && activity > row.rhs + 1e-7) return false;
            if (row.sense == 'G' && activity < row.rhs - 1e-7) return false;
            if (row.sense == 'E' && std::abs(activity - row.rhs) > 1e-7) return false;
        }
        return true;
    };

    // Enumerate n-subsets of planes with a simple odometer.
    for (int j = 0; j < n; ++j) pick[j] = j;
    while (true) {
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (int j = 0; j < n; ++j) {
            a.push_back(planes[pick[j]].coeffs);
            b.push_back(planes[pick[j]].rhs);
        }
        if (auto x = solve_dense(std::move(a), std::move(b)); x && feasible_at(*x)) {
            double value = 0.0;
            for (int j = 0; j < n; ++j) value += objective[j] * (*x)[j];
            if (!result.feasible || value < result.objective) {
                result.feasible = true;
                result.objective = value;
                result.minimizer = *x;
            }
        }
        int level = n - 1;
        while (level >= 0 && pick[level] == total - n + level) --level;
        if (level < 0) break;
        ++pick[level];
        for (int j = level + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return result;
}

// Random box-bounded model with a mix of row senses; always includes at
// least one feasible point (the all-lower corner shifted inward is not
// guaranteed, so feasibility is whatever the oracle decides).
inline gms::MipModel random_model(std::uint64_t seed, int n_vars, int n_rows) {
    std::mt19937_64 rng(seed);
    auto real = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    gms::MipModel model;
    for (int j = 0; j < n_vars; ++j) {
        gms::Variable v;
        v.label = "v" + std::to_string(j);
        v.lower = 0.0;
        v.upper = real(0.5, 2.0);
        v.integral = false;
        model.variables.push_back(std::move(v));
    }
    for (int r = 0; r < n_rows; ++r) {
        gms::ConstraintRow row;
        for (int j = 0; j < n_vars; ++j)
            if (real(0, 1) < 0.7) row.terms.emplace_back(j, real(-2.0, 2.0));
        if (row.terms.empty()) row.terms.emplace_back(r % n_vars, 1.0);
        const double pick = real(0, 1);
        row.sense = pick < 0.6 ? 'L' : (pick < 0.85 ? 'G' : 'E');
        row.rhs = real(-1.0, 2.0);
        row.tag = "r" + std::to_string(r);
        model.rows.push_back(std::move(row));
    }
    for (int j = 0; j < n_vars; ++j) model.objective.emplace_back(j, real(-1.0, 1.0));
    model.provenance = "random:" + std::to_string(seed);
    return model;
}

}  // namespace testsupport
