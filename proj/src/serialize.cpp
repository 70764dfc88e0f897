#include "gms/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace gms {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_json(const FractionalPoint& point) {
    ordered_json j = ordered_json::object();
    for (const auto& [label, value] : point.values) j[label] = value;
    return j;
}

}  // namespace

std::string lp_solution_to_json(const LpSolution& solution) {
    ordered_json j;
    j["status"] = to_string(solution.status);
    j["objective"] = solution.objective;
    j["iterations"] = solution.iterations;
    j["max_residual"] = solution.max_residual;
    j["values"] = point_json(solution.values);
    return j.dump(2) + "\n";
}

std::string mip_solution_to_json(const MipSolution& solution) {
    ordered_json j;
    j["status"] = to_string(solution.status);
    if (solution.has_incumbent) {
        j["objective"] = solution.objective;
        j["incumbent"] = point_json(solution.incumbent);
    } else {
        j["objective"] = nullptr;
        j["incumbent"] = nullptr;
    }
    j["best_bound"] = solution.best_bound;
    j["root_bound"] = solution.root_bound;
    j["nodes"] = solution.nodes;
    return j.dump(2) + "\n";
}

std::string verdict_matrix_to_csv(const std::vector<TightnessVerdict>& verdicts) {
    std::ostringstream out;
    out << "A,B,verdict,bound_gap,samples_used,witness_count\n";
    out.precision(12);
    for (const auto& v : verdicts)
        out << to_string(v.a) << "," << to_string(v.b) << "," << to_string(v.verdict)
            << "," << v.bound_gap << "," << v.samples_used << "," << v.witnesses.size()
            << "\n";
    return out.str();
}

std::vector<FractionalPoint> witnesses_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<FractionalPoint> points;
    for (const auto& entry : j) {
        FractionalPoint point;
        for (auto it = entry.begin(); it != entry.end(); ++it)
            point.set(it.key(), it.value().get<double>());
        points.push_back(std::move(point));
    }
    return points;
}

}  // namespace gms
