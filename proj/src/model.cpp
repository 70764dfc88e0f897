#include "gms/model.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace gms {

int MipModel::find_var(const std::string& label) const {
    if (label_index_.empty()) {
        label_index_.reserve(variables.size());
        for (int i = 0; i < num_vars(); ++i) label_index_.emplace(variables[i].label, i);
    }
    auto it = label_index_.find(label);
    return it == label_index_.end() ? -1 : it->second;
}

double MipModel::objective_value(const std::vector<double>& values) const {
    double total = 0.0;
    for (const auto& [var, coeff] : objective) total += coeff * values[var];
    return total;
}

MipModel relax(const MipModel& model) {
    MipModel relaxed = model;
    for (auto& variable : relaxed.variables) variable.integral = false;
    return relaxed;
}

std::vector<double> dense_values(const MipModel& model, const FractionalPoint& point) {
    std::vector<double> values(model.num_vars(), 0.0);
    for (const auto& [label, value] : point.values) {
        const int var = model.find_var(label);
        if (var >= 0) values[var] = value;
    }
    return values;
}

FractionalPoint point_from_dense(const MipModel& model, const std::vector<double>& values) {
    FractionalPoint point;
    for (int i = 0; i < model.num_vars(); ++i)
        point.values.emplace(model.variables[i].label, values[i]);
    return point;
}

ResidualReport residuals(const MipModel& model, const FractionalPoint& point) {
    const std::vector<double> values = dense_values(model, point);
    ResidualReport report;
    report.row_violation.resize(model.num_rows());
    report.row_activity.resize(model.num_rows());
    for (int r = 0; r < model.num_rows(); ++r) {
        const auto& row = model.rows[r];
        double activity = 0.0;
        for (const auto& [var, coeff] : row.terms) activity += coeff * values[var];
        double violation = 0.0;
        switch (row.sense) {
            case 'L': violation = std::max(0.0, activity - row.rhs); break;
            case 'G': violation = std::max(0.0, row.rhs - activity); break;
            default: violation = std::abs(activity - row.rhs); break;
        }
        report.row_activity[r] = activity;
        report.row_violation[r] = violation;
        if (violation > report.max_row_violation) {
            report.max_row_violation = violation;
            report.worst_row = r;
            report.worst_tag = row.tag;
        }
    }
    for (int i = 0; i < model.num_vars(); ++i) {
        const auto& variable = model.variables[i];
        const double below = variable.lower - values[i];
        const double above = values[i] - variable.upper;
        const double violation = std::max({0.0, below, above});
        if (violation > 0.0) {
            report.bound_violations.emplace_back(variable.label, violation);
            report.max_bound_violation = std::max(report.max_bound_violation, violation);
        }
    }
    return report;
}

double ResidualReport::violation_of(const MipModel& model, const std::string& tag) const {
    for (int r = 0; r < model.num_rows(); ++r)
        if (model.rows[r].tag == tag) return row_violation[r];
    return -1.0;
}

double ResidualReport::slack_of(const MipModel& model, const std::string& tag) const {
    for (int r = 0; r < model.num_rows(); ++r)
        if (model.rows[r].tag == tag) return row_activity[r] - model.rows[r].rhs;
    return 0.0;
}

namespace {

std::string format_coeff(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

// LP-format identifiers: alphanumerics and underscores, leading letter.
std::string lp_name(const std::string& raw, char fallback_prefix) {
    std::string name;
    name.reserve(raw.size());
    for (char c : raw) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
            name.push_back(c);
        else if (c == '[' || c == ']' || c == '=' || c == ',')
            name.push_back('_');
    }
    while (!name.empty() && name.back() == '_') name.pop_back();
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())))
        name.insert(name.begin(), fallback_prefix);
    return name;
}

void write_terms(std::ostream& out, const MipModel& model,
                 const std::vector<std::pair<int, double>>& terms) {
    bool first = true;
    for (const auto& [var, coeff] : terms) {
        if (coeff == 0.0) continue;
        const double magnitude = std::abs(coeff);
        if (first) {
            if (coeff < 0) out << "- ";
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        if (magnitude != 1.0) out << format_coeff(magnitude) << " ";
        out << lp_name(model.variables[var].label, 'x');
    }
    if (first) out << "0 " << lp_name(model.variables.at(0).label, 'x');
}

}  // namespace

void write_lp(const MipModel& model, std::ostream& out) {
    out << "\\ " << model.provenance << "\n";
    out << "Minimize\n obj: ";
    write_terms(out, model, model.objective);
    out << "\nSubject To\n";
    std::unordered_map<std::string, int> seen;
    for (const auto& row : model.rows) {
        std::string name = lp_name(row.tag, 'c');
        const int copy = seen[name]++;
        if (copy > 0) name += "_" + std::to_string(copy);
        out << " " << name << ": ";
        write_terms(out, model, row.terms);
        switch (row.sense) {
            case 'L': out << " <= "; break;
            case 'G': out << " >= "; break;
            default: out << " = "; break;
        }
        out << format_coeff(row.rhs) << "\n";
    }
    out << "Bounds\n";
    for (const auto& variable : model.variables) {
        const std::string name = lp_name(variable.label, 'x');
        if (variable.lower == variable.upper)
            out << " " << name << " = " << format_coeff(variable.lower) << "\n";
        else
            out << " " << format_coeff(variable.lower) << " <= " << name << " <= "
                << format_coeff(variable.upper) << "\n";
    }
    bool any_integral = false;
    for (const auto& variable : model.variables) any_integral |= variable.integral;
    if (any_integral) {
        out << "Binaries\n";
        for (const auto& variable : model.variables)
            if (variable.integral) out << " " << lp_name(variable.label, 'x') << "\n";
    }
    out << "End\n";
}

std::string to_lp_string(const MipModel& model) {
    std::ostringstream out;
    write_lp(model, out);
    return out.str();
}

}  // namespace gms
