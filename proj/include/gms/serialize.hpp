#pragma once

#include <string>
#include <vector>

#include "gms/analysis.hpp"
#include "gms/bnb.hpp"
#include "gms/simplex.hpp"

namespace gms {

std::string lp_solution_to_json(const LpSolution& solution);
std::string mip_solution_to_json(const MipSolution& solution);

/// One CSV row per verdict: A,B,verdict,bound_gap,samples_used,witness_count.
std::string verdict_matrix_to_csv(const std::vector<TightnessVerdict>& verdicts);

/// Witness file: a JSON array of {label: value} objects.
std::vector<FractionalPoint> witnesses_from_json(const std::string& text);

}  // namespace gms
