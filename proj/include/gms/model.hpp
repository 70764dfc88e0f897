#pragma once

#include <cmath>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gms {

enum class VarKind { X, S };

/// One model column. Labels are "X_<t>_<taskid>" / "S_<t>_<taskid>" and are
/// shared across every formulation built from the same instance, so points
/// can be carried from one model to another by label.
struct Variable {
    VarKind kind = VarKind::X;
    int period = 0;  // t, 1-based
    int task = 0;    // index into Instance::tasks
    std::string label;
    double lower = 0.0;
    double upper = 1.0;
    bool integral = false;
};

/// Sparse constraint row. sense is one of 'L' (<=), 'E' (=), 'G' (>=).
/// The tag names the constraint family the row came from, e.g.
/// "1c[t=2,m=m1]" or "couple[t=3]".
struct ConstraintRow {
    std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
    char sense = 'L';
    double rhs = 0.0;
    std::string tag;
};

/// Formulation-agnostic sparse MIP: the common target of all builders and
/// the common input of both solvers. Immutable once built.
struct MipModel {
    std::vector<Variable> variables;
    std::vector<ConstraintRow> rows;
    std::vector<std::pair<int, double>> objective;  // minimize
    std::string provenance;

    int num_vars() const { return static_cast<int>(variables.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }

    /// Index of the variable with this label, or -1.
    int find_var(const std::string& label) const;

    /// Objective value of a dense assignment in variable order.
    double objective_value(const std::vector<double>& values) const;

  private:
    mutable std::unordered_map<std::string, int> label_index_;
};

/// A (possibly fractional) assignment of values to variable labels. Labels
/// missing from a model are ignored by that model; labels a model has but
/// the point lacks default to 0.
struct FractionalPoint {
    std::map<std::string, double> values;

    double get(const std::string& label) const {
        auto it = values.find(label);
        return it == values.end() ? 0.0 : it->second;
    }
    void set(const std::string& label, double v) { values[label] = v; }
};

/// Same model with every integrality flag cleared; rows, bounds and
/// objective are copied bit-identically.
MipModel relax(const MipModel& model);

/// Per-row constraint violations of a point, plus bound violations reported
/// separately. violation(row) = max(0, signed slack deficit); equality rows
/// use |activity - rhs|.
struct ResidualReport {
    std::vector<double> row_violation;            // aligned with model.rows
    std::vector<double> row_activity;
    double max_row_violation = 0.0;
    int worst_row = -1;                           // first row attaining the max
    std::string worst_tag;
    std::vector<std::pair<std::string, double>> bound_violations;
    double max_bound_violation = 0.0;

    double max_violation() const { return std::max(max_row_violation, max_bound_violation); }
    /// Violation of the first row whose tag matches exactly; -1 if absent.
    double violation_of(const MipModel& model, const std::string& tag) const;
    /// activity - rhs of the first row with this tag (slack deficit signed).
    double slack_of(const MipModel& model, const std::string& tag) const;
};

ResidualReport residuals(const MipModel& model, const FractionalPoint& point);

/// Expand a point into a dense vector in model variable order (missing -> 0).
std::vector<double> dense_values(const MipModel& model, const FractionalPoint& point);
FractionalPoint point_from_dense(const MipModel& model, const std::vector<double>& values);

/// CPLEX LP text export (Minimize / Subject To / Bounds / Binaries / End)
/// with tagged row names and <= 12 significant digits.
void write_lp(const MipModel& model, std::ostream& out);
std::string to_lp_string(const MipModel& model);

// Artifact-wide numeric policy.
constexpr double kFeasTol = 1e-6;      // feasibility comparisons
constexpr double kPivotTol = 1e-9;     // simplex pivot / reduced-cost threshold
constexpr double kPhase1Tol = 1e-7;    // phase-1 objective below this = feasible
constexpr double kIntegralityTol = 1e-6;

}  // namespace gms
