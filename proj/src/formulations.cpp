#include "gms/formulations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gms {

std::string to_string(FormulationId id) {
    switch (id) {
        case FormulationId::F1: return "F1";
        case FormulationId::F2: return "F2";
        case FormulationId::F3: return "F3";
        case FormulationId::F4: return "F4";
        case FormulationId::F5: return "F5";
        case FormulationId::F6: return "F6";
        case FormulationId::F7: return "F7";
    }
    return "F?";
}

FormulationId formulation_from_string(const std::string& name) {
    for (FormulationId id : kAllFormulations)
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown formulation: " + name);
}

bool has_start_vars(FormulationId id) {
    switch (id) {
        case FormulationId::F1:
        case FormulationId::F4:
        case FormulationId::F6:
        case FormulationId::F7: return true;
        default: return false;
    }
}

bool has_exec_vars(FormulationId id) { return id != FormulationId::F6; }

namespace {

std::string var_label(VarKind kind, int t, const std::string& task_id) {
    return std::string(kind == VarKind::X ? "X" : "S") + "_" + std::to_string(t) + "_" +
           task_id;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string fingerprint(const Instance& instance) {
    char buffer[20];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(fnv1a(instance_to_json(instance))));
    return buffer;
}

// Accumulates sparse terms, combining duplicate columns and dropping the
// zeros that combination produces.
class RowBuilder {
  public:
    void add(int var, double coeff) {
        if (var < 0 || coeff == 0.0) return;
        accumulated_[var] += coeff;
    }
    std::vector<std::pair<int, double>> take() {
        std::vector<std::pair<int, double>> terms;
        terms.reserve(accumulated_.size());
        for (const auto& [var, coeff] : accumulated_)
            if (coeff != 0.0) terms.emplace_back(var, coeff);
        accumulated_.clear();
        return terms;
    }

  private:
    std::map<int, double> accumulated_;
};

class ModelBuilder {
  public:
    ModelBuilder(FormulationId id, const Instance& instance)
        : id_(id), instance_(instance), horizon_(instance.horizon) {
        if (has_exec_vars(id))
            x_base_.assign(instance.num_tasks(), -1);
        if (has_start_vars(id))
            s_base_.assign(instance.num_tasks(), -1);
        for (int m = 0; m < instance.num_tasks(); ++m) {
            if (has_exec_vars(id)) {
                x_base_[m] = model_.num_vars();
                for (int t = 1; t <= horizon_; ++t)
                    push_var(VarKind::X, t, m, 1.0);
            }
        }
        for (int m = 0; m < instance.num_tasks(); ++m) {
            if (has_start_vars(id)) {
                s_base_[m] = model_.num_vars();
                const int tail = horizon_ - instance.tasks[m].duration + 2;
                for (int t = 1; t <= horizon_; ++t)
                    push_var(VarKind::S, t, m, t >= tail ? 0.0 : 1.0);
            }
        }
    }

    int x_var(int t, int m) const {
        if (t < 1 || t > horizon_) return -1;
        return x_base_[m] + t - 1;
    }
    int s_var(int t, int m) const {
        if (t < 1 || t > horizon_) return -1;
        return s_base_[m] + t - 1;
    }

    // The execution expression: the X column itself, or the window sum of
    // starts where X is not represented (F6).
    void add_exec(RowBuilder& row, int t, int m, double coeff) const {
        if (id_ != FormulationId::F6) {
            row.add(x_var(t, m), coeff);
            return;
        }
        const int duration = instance_.tasks[m].duration;
        for (int tp = t - duration + 1; tp <= t; ++tp) row.add(s_var(tp, m), coeff);
    }

    void push_row(RowBuilder& builder, char sense, double rhs, std::string tag) {
        ConstraintRow row;
        row.terms = builder.take();
        row.sense = sense;
        row.rhs = rhs;
        row.tag = std::move(tag);
        if (row.terms.empty()) {
            const bool satisfied = (sense == 'L' && rhs >= 0) || (sense == 'G' && rhs <= 0) ||
                                   (sense == 'E' && rhs == 0);
            if (!satisfied)
                throw std::logic_error("empty infeasible row generated: " + row.tag);
            return;  // vacuous after clamping
        }
        model_.rows.push_back(std::move(row));
    }

    MipModel finish() {
        RowBuilder objective;
        for (int m = 0; m < instance_.num_tasks(); ++m)
            for (int t = 1; t <= horizon_; ++t)
                add_exec(objective, t, m, instance_.cost_at(t, m));
        model_.objective = objective.take();

        if (instance_.coupling_enabled) {
            for (int t = 1; t <= horizon_; ++t) {
                RowBuilder row;
                for (int m = 0; m < instance_.num_tasks(); ++m)
                    add_exec(row, t, m, instance_.tasks[m].capacity);
                push_row(row, 'L', *instance_.total_capacity - (*instance_.demand)[t - 1],
                         "couple[t=" + std::to_string(t) + "]");
            }
        }
        model_.provenance = to_string(id_) + ":" + fingerprint(instance_);
        return std::move(model_);
    }

    MipModel& model() { return model_; }
    const Instance& instance() const { return instance_; }
    int horizon() const { return horizon_; }

    std::string tag(const char* family, int t, int m) const {
        return std::string(family) + "[t=" + std::to_string(t) +
               ",m=" + instance_.tasks[m].id + "]";
    }
    std::string tag(const char* family, int m) const {
        return std::string(family) + "[m=" + instance_.tasks[m].id + "]";
    }

  private:
    void push_var(VarKind kind, int t, int m, double upper) {
        Variable variable;
        variable.kind = kind;
        variable.period = t;
        variable.task = m;
        variable.label = var_label(kind, t, instance_.tasks[m].id);
        variable.lower = 0.0;
        variable.upper = upper;
        variable.integral = true;
        model_.variables.push_back(std::move(variable));
    }

    FormulationId id_;
    const Instance& instance_;
    int horizon_;
    MipModel model_;
    std::vector<int> x_base_;
    std::vector<int> s_base_;
};

// sum_t X_{t,m} = W_m
void add_duration_rows(ModelBuilder& b, const char* family) {
    for (int m = 0; m < b.instance().num_tasks(); ++m) {
        RowBuilder row;
        for (int t = 1; t <= b.horizon(); ++t) row.add(b.x_var(t, m), 1.0);
        b.push_row(row, 'E', b.instance().tasks[m].duration, b.tag(family, m));
    }
}

// sum_t S_{t,m} = 1
void add_single_start_rows(ModelBuilder& b, const char* family) {
    for (int m = 0; m < b.instance().num_tasks(); ++m) {
        RowBuilder row;
        for (int t = 1; t <= b.horizon(); ++t) row.add(b.s_var(t, m), 1.0);
        b.push_row(row, 'E', 1.0, b.tag(family, m));
    }
}

}  // namespace

MipModel build(FormulationId id, const Instance& instance) {
    const auto violations = validate(instance);
    if (!violations.empty())
        throw std::invalid_argument("cannot build " + to_string(id) +
                                    ": invalid instance: " + violations.front());

    ModelBuilder b(id, instance);
    const int horizon = instance.horizon;

    switch (id) {
        case FormulationId::F1:
            add_duration_rows(b, "1a");
            add_single_start_rows(b, "1b");
            for (int m = 0; m < instance.num_tasks(); ++m)
                for (int t = 1; t <= horizon; ++t) {
                    RowBuilder row;  // X_t - X_{t-1} <= S_t
                    row.add(b.x_var(t, m), 1.0);
                    row.add(b.x_var(t - 1, m), -1.0);
                    row.add(b.s_var(t, m), -1.0);
                    b.push_row(row, 'L', 0.0, b.tag("1c", t, m));
                }
            break;

        case FormulationId::F2:
            add_duration_rows(b, "2a");
            for (int m = 0; m < instance.num_tasks(); ++m) {
                const int duration = instance.tasks[m].duration;
                for (int t = 1; t <= horizon; ++t)
                    for (int tl = t; tl <= t + duration - 1; ++tl) {
                        RowBuilder row;  // X_t - X_{t-1} <= X_tl
                        row.add(b.x_var(t, m), 1.0);
                        row.add(b.x_var(t - 1, m), -1.0);
                        row.add(b.x_var(tl, m), -1.0);
                        b.push_row(row, 'L', 0.0,
                                   "2b[t=" + std::to_string(t) + ",l=" + std::to_string(tl) +
                                       ",m=" + instance.tasks[m].id + "]");
                    }
            }
            break;

        case FormulationId::F3:
            add_duration_rows(b, "3a");
            for (int m = 0; m < instance.num_tasks(); ++m)
                for (int t = 1; t <= horizon; ++t) {
                    RowBuilder row;  // X_t - X_{t-1} <= X_{t+W-1}
                    row.add(b.x_var(t, m), 1.0);
                    row.add(b.x_var(t - 1, m), -1.0);
                    row.add(b.x_var(t + instance.tasks[m].duration - 1, m), -1.0);
                    b.push_row(row, 'L', 0.0, b.tag("3b", t, m));
                }
            break;

        case FormulationId::F4:
            add_duration_rows(b, "4a");
            add_single_start_rows(b, "4b");
            for (int m = 0; m < instance.num_tasks(); ++m)
                for (int t = 1; t <= horizon; ++t) {
                    RowBuilder row;  // sum_{t'=t-W+1..t} S_{t'} >= X_t
                    for (int tp = t - instance.tasks[m].duration + 1; tp <= t; ++tp)
                        row.add(b.s_var(tp, m), 1.0);
                    row.add(b.x_var(t, m), -1.0);
                    b.push_row(row, 'G', 0.0, b.tag("4c", t, m));
                }
            break;

        case FormulationId::F5:
            add_duration_rows(b, "5a");
            for (int m = 0; m < instance.num_tasks(); ++m) {
                const int duration = instance.tasks[m].duration;
                for (int t = 1; t <= horizon; ++t) {
                    RowBuilder row;  // W(X_t - X_{t-1}) <= sum_{t'=t..t+W-1} X_{t'}
                    row.add(b.x_var(t, m), duration);
                    row.add(b.x_var(t - 1, m), -duration);
                    for (int tp = t; tp <= t + duration - 1; ++tp)
                        row.add(b.x_var(tp, m), -1.0);
                    b.push_row(row, 'L', 0.0, b.tag("5b", t, m));
                }
            }
            break;

        case FormulationId::F6:
            add_single_start_rows(b, "6a");
            break;

        case FormulationId::F7:
            add_single_start_rows(b, "7a");
            for (int m = 0; m < instance.num_tasks(); ++m)
                for (int t = 1; t <= horizon; ++t) {
                    RowBuilder row;  // sum_{t'=t-W+1..t} S_{t'} = X_t
                    for (int tp = t - instance.tasks[m].duration + 1; tp <= t; ++tp)
                        row.add(b.s_var(tp, m), 1.0);
                    row.add(b.x_var(t, m), -1.0);
                    b.push_row(row, 'E', 0.0, b.tag("7b", t, m));
                }
            break;
    }

    return b.finish();
}

std::uint64_t enumeration_size(const Instance& instance) {
    std::uint64_t combinations = 1;
    for (const auto& task : instance.tasks) {
        const std::uint64_t placements = instance.horizon - task.duration + 1;
        if (combinations > (1ULL << 62) / std::max<std::uint64_t>(placements, 1))
            return 1ULL << 62;
        combinations *= placements;
    }
    return combinations;
}

FractionalPoint schedule_point(FormulationId id, const Instance& instance,
                               const Schedule& schedule) {
    FractionalPoint point;
    for (int m = 0; m < instance.num_tasks(); ++m) {
        const auto& task = instance.tasks[m];
        const int start = schedule.start.at(task.id);
        for (int t = 1; t <= instance.horizon; ++t) {
            const bool active = t >= start && t <= start + task.duration - 1;
            if (has_exec_vars(id))
                point.set(var_label(VarKind::X, t, task.id), active ? 1.0 : 0.0);
            if (has_start_vars(id))
                point.set(var_label(VarKind::S, t, task.id), t == start ? 1.0 : 0.0);
        }
    }
    return point;
}

std::vector<Schedule> integer_feasible_set(FormulationId id, const Instance& instance) {
    if (enumeration_size(instance) > 1'000'000)
        throw BudgetExceeded("integer_feasible_set: more than 10^6 start combinations");

    const MipModel model = build(id, instance);
    const int n_tasks = instance.num_tasks();
    std::vector<int> starts(n_tasks, 1);
    std::vector<int> last(n_tasks);
    for (int m = 0; m < n_tasks; ++m)
        last[m] = instance.horizon - instance.tasks[m].duration + 1;

    std::vector<Schedule> feasible;
    while (true) {
        Schedule schedule;
        for (int m = 0; m < n_tasks; ++m)
            schedule.start[instance.tasks[m].id] = starts[m];
        if (residuals(model, schedule_point(id, instance, schedule)).max_violation() <= 1e-9)
            feasible.push_back(std::move(schedule));

        int m = n_tasks - 1;
        while (m >= 0 && starts[m] == last[m]) starts[m--] = 1;
        if (m < 0) break;
        ++starts[m];
    }
    return feasible;
}

}  // namespace gms
