#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gms/instance.hpp"
#include "gms/model.hpp"

namespace gms {

/// The seven GMS formulations. F1..F5 differ in how they enforce
/// non-preemptive execution; F6 carries only start variables; F7 is F6 plus
/// explicit execution variables linked by window-sum equalities.
enum class FormulationId { F1, F2, F3, F4, F5, F6, F7 };

constexpr FormulationId kAllFormulations[] = {
    FormulationId::F1, FormulationId::F2, FormulationId::F3, FormulationId::F4,
    FormulationId::F5, FormulationId::F6, FormulationId::F7};

std::string to_string(FormulationId id);
FormulationId formulation_from_string(const std::string& name);

/// True for formulations whose models carry start (S) variables.
bool has_start_vars(FormulationId id);
/// True for formulations whose models carry execution (X) variables.
bool has_exec_vars(FormulationId id);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Builds the model for one formulation: the formulation's constraint rows
/// (expanded over periods and tasks, with out-of-horizon references dropped),
/// the shared cost objective, optional capacity coupling rows, and -- where
/// start variables exist -- upper bound 0 on every start that could not
/// finish inside the horizon. For F6 every occurrence of an execution
/// variable in the objective or coupling rows is replaced by the window sum
/// of starts. Throws std::invalid_argument when validate(instance) is
/// nonempty.
MipModel build(FormulationId id, const Instance& instance);

/// Number of start combinations an exhaustive enumeration must visit.
std::uint64_t enumeration_size(const Instance& instance);

/// All schedules whose 0/1 encoding satisfies the formulation's rows,
/// sorted lexicographically by task starts. Throws BudgetExceeded when the
/// start-combination count exceeds 10^6.
std::vector<Schedule> integer_feasible_set(FormulationId id, const Instance& instance);

/// 0/1 point encoding a schedule in the formulation's variable space.
FractionalPoint schedule_point(FormulationId id, const Instance& instance,
                               const Schedule& schedule);

}  // namespace gms
