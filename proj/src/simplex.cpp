#include "gms/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <stdexcept>

#include "gms/kernels.hpp"

namespace gms {

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
        case LpStatus::iteration_limit: return "iteration-limit";
    }
    return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDegenerateStep = 1e-12;
constexpr int kBlandTrigger = 20;  // consecutive degenerate pivots before Bland's rule

enum class ColState : unsigned char { at_lower, at_upper, basic };

/// Bounded-variable primal simplex working state over the standard form
/// [A | I] x = b with one logical column per row. Rows keep their model
/// senses through the logical's bounds: <= gives [0, inf), >= gives
/// (-inf, 0], = gives [0, 0]. Artificial columns are appended only for rows
/// whose logical starts outside its bounds.
class Simplex {
  public:
    Simplex(const MipModel& model, std::span<const BoundOverride> overrides,
            const SimplexOptions& options)
        : model_(model), options_(options) {
        m_ = model.num_rows();
        n_struct_ = model.num_vars();
        if (n_struct_ < 1) throw std::invalid_argument("lp_solve: model has no variables");

        cols_.resize(n_struct_ + m_);
        lo_.resize(n_struct_ + m_);
        hi_.resize(n_struct_ + m_);
        for (int j = 0; j < n_struct_; ++j) {
            lo_[j] = model.variables[j].lower;
            hi_[j] = model.variables[j].upper;
        }
        for (const auto& override_ : overrides) {
            lo_[override_.var] = override_.lower;
            hi_[override_.var] = override_.upper;
        }
        b_.resize(m_);
        for (int r = 0; r < m_; ++r) {
            const auto& row = model.rows[r];
            b_[r] = row.rhs;
            for (const auto& [var, coeff] : row.terms) cols_[var].emplace_back(r, coeff);
            const int logical = n_struct_ + r;
            cols_[logical].emplace_back(r, 1.0);
            switch (row.sense) {
                case 'L': lo_[logical] = 0.0;   hi_[logical] = kInf; break;
                case 'G': lo_[logical] = -kInf; hi_[logical] = 0.0;  break;
                default:  lo_[logical] = 0.0;   hi_[logical] = 0.0;  break;
            }
        }

        iteration_limit_ = options.iteration_limit > 0
                               ? options.iteration_limit
                               : 50 * (model.num_rows() + model.num_vars());
    }

    LpSolution run() {
        setup_phase1();
        LpStatus status = iterate();
        LpSolution solution;
        solution.iterations = iterations_;
        if (status != LpStatus::optimal) {
            // Phase 1 minimizes a nonnegative sum, so "unbounded" here can
            // only be numerical; report the conservative status.
            solution.status = LpStatus::iteration_limit;
            extract(solution);
            return solution;
        }
        const double infeasibility = phase1_objective();
        solution.phase1_infeasibility = infeasibility;
        if (infeasibility > kPhase1Tol) {
            solution.status = LpStatus::infeasible;
            extract(solution);
            return solution;
        }

        setup_phase2();
        status = iterate();
        solution.status = status;
        solution.iterations = iterations_;
        solution.phase1_infeasibility = infeasibility;
        extract(solution);

        if (status == LpStatus::optimal && solution.max_residual > 1e-8) {
            // Numerical drift beyond the refactor cadence: rebuild and retry
            // the extraction once.
            refactor();
            extract(solution);
        }
        if (!options_.dump_path.empty()) dump();
        return solution;
    }

  private:
    int total_cols() const { return static_cast<int>(cols_.size()); }
    bool is_fixed(int j) const { return hi_[j] - lo_[j] <= kDegenerateStep; }
    bool is_artificial(int j) const { return j >= art_base_; }

    double nonbasic_value(int j) const {
        return state_[j] == ColState::at_upper ? hi_[j] : lo_[j];
    }

    void setup_phase1() {
        state_.assign(total_cols(), ColState::at_lower);
        for (int j = 0; j < n_struct_; ++j) {
            if (lo_[j] == -kInf) {
                if (hi_[j] == kInf)
                    throw std::invalid_argument("lp_solve: free variables unsupported");
                state_[j] = ColState::at_upper;
            }
        }

        basis_.resize(m_);
        x_basic_.assign(m_, 0.0);
        std::vector<double> residual = rhs_minus_nonbasic();
        art_base_ = total_cols();
        cost_.assign(total_cols(), 0.0);
        for (int r = 0; r < m_; ++r) {
            const int logical = n_struct_ + r;
            double value = residual[r];
            if (value >= lo_[logical] - kDegenerateStep &&
                value <= hi_[logical] + kDegenerateStep) {
                basis_[r] = logical;
                state_[logical] = ColState::basic;
                x_basic_[r] = value;
                continue;
            }
            const double clamped = value < lo_[logical] ? lo_[logical] : hi_[logical];
            state_[logical] = value < lo_[logical] ? ColState::at_lower : ColState::at_upper;
            const double deficit = value - clamped;
            const int artificial = total_cols();
            cols_.push_back({{r, deficit > 0 ? 1.0 : -1.0}});
            lo_.push_back(0.0);
            hi_.push_back(kInf);
            state_.push_back(ColState::basic);
            cost_.push_back(1.0);
            basis_[r] = artificial;
            x_basic_[r] = std::abs(deficit);
        }

        binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
        for (int r = 0; r < m_; ++r) binv_[static_cast<std::size_t>(r) * m_ + r] = 1.0;
        pivots_since_refactor_ = 0;
        consecutive_degenerate_ = 0;
        bland_mode_ = false;
    }

    double phase1_objective() const {
        double total = 0.0;
        for (int r = 0; r < m_; ++r)
            if (is_artificial(basis_[r])) total += std::max(0.0, x_basic_[r]);
        return total;
    }

    void setup_phase2() {
        // Artificials may never move again.
        for (int j = art_base_; j < total_cols(); ++j) {
            lo_[j] = hi_[j] = 0.0;
            cost_[j] = 0.0;
        }
        std::fill(cost_.begin(), cost_.end(), 0.0);
        for (const auto& [var, coeff] : model_.objective) cost_[var] = coeff;
        drive_out_artificials();
        consecutive_degenerate_ = 0;
        bland_mode_ = false;
    }

    // Degenerate swaps that replace basic artificials with any usable
    // column; rows admitting none are redundant and keep their artificial
    // pinned at zero.
    void drive_out_artificials() {
        for (int r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[r])) continue;
            const double* binv_row = binv_.data() + static_cast<std::size_t>(r) * m_;
            int entering = -1;
            for (int j = 0; j < art_base_ && entering < 0; ++j) {
                if (state_[j] == ColState::basic || is_fixed(j)) continue;
                double alpha = 0.0;
                for (const auto& [row, coeff] : cols_[j]) alpha += binv_row[row] * coeff;
                if (std::abs(alpha) > 1e-7) entering = j;
            }
            if (entering < 0) continue;
            kernels::ftran(binv_, m_, cols_[entering], work_);
            const double entering_value = nonbasic_value(entering);
            state_[basis_[r]] = ColState::at_lower;
            state_[entering] = ColState::basic;
            basis_[r] = entering;
            kernels::pivot_update(binv_, m_, r, work_);
            x_basic_[r] = entering_value;
            ++pivots_since_refactor_;
        }
    }

    std::vector<double> rhs_minus_nonbasic() const {
        std::vector<double> residual = b_;
        for (int j = 0; j < total_cols(); ++j) {
            if (state_[j] == ColState::basic) continue;
            const double value = nonbasic_value(j);
            if (value == 0.0) continue;
            for (const auto& [row, coeff] : cols_[j]) residual[row] -= coeff * value;
        }
        return residual;
    }

    void refactor() {
        std::vector<int> basic_columns = basis_;
        std::sort(basic_columns.begin(), basic_columns.end());
        std::vector<bool> row_used(m_, false);
        std::vector<int> pending;

        binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
        for (int r = 0; r < m_; ++r) binv_[static_cast<std::size_t>(r) * m_ + r] = 1.0;

        // Logical columns are unit vectors: pivoting them onto their own row
        // leaves the identity untouched, so only the remaining columns cost
        // elimination work.
        for (int column : basic_columns) {
            if (column >= n_struct_ && column < art_base_)
                row_used[column - n_struct_] = true;
            else
                pending.push_back(column);
        }
        std::vector<int> new_basis(m_, -1);
        for (int r = 0; r < m_; ++r)
            if (row_used[r]) new_basis[r] = n_struct_ + r;

        for (int column : pending) {
            kernels::ftran(binv_, m_, cols_[column], work_);
            int pivot_row = -1;
            double best = 1e-11;
            for (int r = 0; r < m_; ++r) {
                if (row_used[r]) continue;
                const double magnitude = std::abs(work_[r]);
                if (magnitude > best) {
                    best = magnitude;
                    pivot_row = r;
                }
            }
            if (pivot_row < 0) {
                // Numerically singular basis; demote the column and let the
                // row fall back to its logical below.
                state_[column] = ColState::at_lower;
                continue;
            }
            kernels::pivot_update(binv_, m_, pivot_row, work_);
            row_used[pivot_row] = true;
            new_basis[pivot_row] = column;
        }
        for (int r = 0; r < m_; ++r) {
            if (new_basis[r] >= 0) continue;
            const int logical = n_struct_ + r;
            kernels::ftran(binv_, m_, cols_[logical], work_);
            kernels::pivot_update(binv_, m_, r, work_);
            new_basis[r] = logical;
            state_[logical] = ColState::basic;
        }
        basis_ = std::move(new_basis);
        recompute_basic_values();
        pivots_since_refactor_ = 0;
    }

    void recompute_basic_values() {
        const std::vector<double> residual = rhs_minus_nonbasic();
        std::vector<std::pair<int, double>> dense;
        dense.reserve(m_);
        for (int r = 0; r < m_; ++r)
            if (residual[r] != 0.0) dense.emplace_back(r, residual[r]);
        kernels::ftran(binv_, m_, dense, x_basic_);
    }

    LpStatus iterate() {
        while (true) {
            if (iterations_ >= iteration_limit_) return LpStatus::iteration_limit;
            if (pivots_since_refactor_ >= options_.refactor_period) refactor();

            kernels::btran(binv_, m_, basic_costs(), duals_);

            // Pricing: Dantzig by default, Bland while degeneracy persists.
            int entering = -1;
            double best_score = kPivotTol;
            for (int j = 0; j < total_cols(); ++j) {
                if (state_[j] == ColState::basic || is_fixed(j)) continue;
                double reduced = cost_[j];
                for (const auto& [row, coeff] : cols_[j]) reduced -= duals_[row] * coeff;
                const bool improving = state_[j] == ColState::at_lower
                                           ? reduced < -kPivotTol
                                           : reduced > kPivotTol;
                if (!improving) continue;
                if (bland_mode_) {
                    entering = j;
                    break;
                }
                if (std::abs(reduced) > best_score) {
                    best_score = std::abs(reduced);
                    entering = j;
                }
            }
            if (entering < 0) return LpStatus::optimal;

            const double direction = state_[entering] == ColState::at_lower ? 1.0 : -1.0;
            kernels::ftran(binv_, m_, cols_[entering], work_);

            // Ratio test over basic bounds, plus the entering variable's own
            // range as a bound-flip step.
            double step = hi_[entering] - lo_[entering];
            int blocking = -1;
            bool blocking_at_upper = false;
            for (int r = 0; r < m_; ++r) {
                const double rate = direction * work_[r];
                const int column = basis_[r];
                double limit;
                bool at_upper;
                if (rate > kPivotTol) {
                    if (lo_[column] == -kInf) continue;
                    limit = (x_basic_[r] - lo_[column]) / rate;
                    at_upper = false;
                } else if (rate < -kPivotTol) {
                    if (hi_[column] == kInf) continue;
                    limit = (hi_[column] - x_basic_[r]) / (-rate);
                    at_upper = true;
                } else {
                    continue;
                }
                if (limit < 0.0) limit = 0.0;
                bool better = limit < step - kDegenerateStep;
                if (!better && blocking >= 0 && limit <= step + kDegenerateStep) {
                    // Tie: lowest row index wins (lowest variable index under
                    // Bland's rule).
                    better = bland_mode_ ? column < basis_[blocking] : false;
                }
                if (!better && blocking < 0 && limit <= step + kDegenerateStep)
                    better = true;
                if (better) {
                    step = std::min(step, limit);
                    blocking = r;
                    blocking_at_upper = at_upper;
                }
            }

            if (blocking < 0 && !std::isfinite(step)) return LpStatus::unbounded;

            ++iterations_;
            if (step > kDegenerateStep) {
                for (int r = 0; r < m_; ++r) {
                    const double rate = work_[r];
                    if (rate != 0.0) x_basic_[r] -= step * direction * rate;
                }
                consecutive_degenerate_ = 0;
                bland_mode_ = false;
            } else {
                step = 0.0;
                if (++consecutive_degenerate_ >= kBlandTrigger) bland_mode_ = true;
            }

            if (blocking < 0) {
                // Bound flip: the entering variable crosses its whole range.
                state_[entering] = state_[entering] == ColState::at_lower
                                       ? ColState::at_upper
                                       : ColState::at_lower;
                continue;
            }

            const int leaving = basis_[blocking];
            const double entering_value = nonbasic_value(entering) + direction * step;
            state_[leaving] = blocking_at_upper ? ColState::at_upper : ColState::at_lower;
            if (is_artificial(leaving)) lo_[leaving] = hi_[leaving] = 0.0;
            state_[entering] = ColState::basic;
            basis_[blocking] = entering;
            kernels::pivot_update(binv_, m_, blocking, work_);
            x_basic_[blocking] = entering_value;
            ++pivots_since_refactor_;
        }
    }

    const std::vector<double>& basic_costs() {
        basic_costs_.resize(m_);
        for (int r = 0; r < m_; ++r) basic_costs_[r] = cost_[basis_[r]];
        return basic_costs_;
    }

    void extract(LpSolution& solution) {
        recompute_basic_values();
        std::vector<double> values(n_struct_);
        for (int j = 0; j < n_struct_; ++j)
            values[j] = state_[j] == ColState::basic ? 0.0 : nonbasic_value(j);
        for (int r = 0; r < m_; ++r)
            if (basis_[r] < n_struct_) values[basis_[r]] = x_basic_[r];
        solution.values = point_from_dense(model_, values);
        solution.objective = model_.objective_value(values);
        solution.basis = basis_;
        solution.iterations = iterations_;
        solution.max_residual = residuals(model_, solution.values).max_violation();
    }

    void dump() const {
        std::ofstream out(options_.dump_path);
        if (!out) return;
        out << "basis (row: column label, value)\n";
        for (int r = 0; r < m_; ++r) {
            const int column = basis_[r];
            out << r << ": ";
            if (column < n_struct_)
                out << model_.variables[column].label;
            else if (column < art_base_)
                out << "logical[" << model_.rows[column - n_struct_].tag << "]";
            else
                out << "artificial#" << (column - art_base_);
            out << " = " << x_basic_[r] << "\n";
        }
        out << "duals\n";
        for (int r = 0; r < m_; ++r)
            out << model_.rows[r].tag << " = " << duals_[r] << "\n";
    }

    const MipModel& model_;
    SimplexOptions options_;
    int m_ = 0;
    int n_struct_ = 0;
    int art_base_ = 0;
    std::vector<std::vector<std::pair<int, double>>> cols_;
    std::vector<double> lo_, hi_, b_, cost_;
    std::vector<ColState> state_;
    std::vector<int> basis_;
    std::vector<double> x_basic_;
    std::vector<double> binv_;
    std::vector<double> duals_, work_, basic_costs_;
    int iterations_ = 0;
    int iteration_limit_ = 0;
    int pivots_since_refactor_ = 0;
    int consecutive_degenerate_ = 0;
    bool bland_mode_ = false;
};

}  // namespace

LpSolution lp_solve(const MipModel& model, const SimplexOptions& options) {
    return lp_solve(model, {}, options);
}

LpSolution lp_solve(const MipModel& model, std::span<const BoundOverride> overrides,
                    const SimplexOptions& options) {
    Simplex simplex(model, overrides, options);
    return simplex.run();
}

ProbeResult feasibility_probe(const MipModel& model, const FractionalPoint& fixed) {
    std::vector<BoundOverride> pins;
    pins.reserve(fixed.values.size());
    for (const auto& [label, value] : fixed.values) {
        const int var = model.find_var(label);
        if (var < 0)
            throw std::invalid_argument("feasibility_probe: unknown variable " + label);
        const auto& variable = model.variables[var];
        if (value < variable.lower - kFeasTol || value > variable.upper + kFeasTol) {
            ProbeResult result;
            result.feasible = false;
            result.infeasibility = std::max(variable.lower - value, value - variable.upper);
            return result;
        }
        pins.push_back({var, value, value});
    }
    const LpSolution solution = lp_solve(model, pins);
    ProbeResult result;
    result.feasible = solution.status == LpStatus::optimal &&
                      solution.phase1_infeasibility <= kPhase1Tol;
    result.infeasibility = solution.phase1_infeasibility;
    if (result.feasible) result.witness = solution.values;
    return result;
}

LpSolution sample_vertex(const MipModel& model, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MipModel randomized = model;
    randomized.objective.clear();
    for (int j = 0; j < model.num_vars(); ++j) {
        const double coeff =
            -1.0 + 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        randomized.objective.emplace_back(j, coeff);
    }
    LpSolution solution = lp_solve(randomized);
    // Report the vertex's objective under the model's own cost vector.
    solution.objective = model.objective_value(dense_values(model, solution.values));
    return solution;
}

}  // namespace gms
