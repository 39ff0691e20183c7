#pragma once

#include <string>

#include <json.hpp>

#include "selectorate/solver.hpp"

namespace selectorate::cli {

using Json = nlohmann::ordered_json;

/// x rounded to `precision` decimal places; -0 is normalized to 0 and
/// non-finite values pass through.
double round_to(double x, int precision);

/// Fixed-point decimal rendering of x at `precision` places ("%.*f"),
/// locale-independent, "nan" for NaN.
std::string format_fixed(double x, int precision);

Json params_json(const PolityParams& params, int precision);
Json functions_json(const FunctionFamily& fns, int precision);
Json solution_json(const EquilibriumSolution& sol, int precision);

}  // namespace selectorate::cli
