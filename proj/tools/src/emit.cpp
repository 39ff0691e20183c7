#include "emit.hpp"

#include <cmath>
#include <cstdio>

namespace selectorate::cli {

double round_to(double x, int precision) {
  if (!std::isfinite(x)) return x;
  const double scale = std::pow(10.0, precision);
  double rounded = std::round(x * scale) / scale;
  if (rounded == 0.0) rounded = 0.0;  // drop the sign of -0
  return rounded;
}

std::string format_fixed(double x, int precision) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  const double rounded = round_to(x, precision);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, rounded);
  return buffer;
}

Json params_json(const PolityParams& params, int precision) {
  Json out;
  out["N"] = round_to(params.n_residents, precision);
  out["S"] = round_to(params.selectorate, precision);
  out["W"] = round_to(params.coalition, precision);
  out["R"] = round_to(params.base_revenue, precision);
  out["r"] = round_to(params.tax_rate, precision);
  out["p"] = round_to(params.public_price, precision);
  out["delta"] = round_to(params.discount, precision);
  return out;
}

Json functions_json(const FunctionFamily& fns, int precision) {
  Json out;
  out["v_exponent"] = round_to(fns.v_exponent, precision);
  out["u_exponent"] = round_to(fns.u_exponent, precision);
  out["phi_exponent"] = round_to(fns.phi_exponent, precision);
  return out;
}

Json solution_json(const EquilibriumSolution& sol, int precision) {
  Json out;
  out["regime"] = to_string(sol.regime);
  out["retention_probability"] =
      round_to(sol.retention_probability, precision);
  out["g_star"] = round_to(sol.allocation.public_goods, precision);
  out["z_star"] = round_to(sol.allocation.private_goods, precision);
  out["discretionary"] = round_to(sol.discretionary_resources, precision);
  out["benchmark"] = {
      {"g_hat", round_to(sol.benchmark.g_hat, precision)},
      {"z_hat", round_to(sol.benchmark.z_hat, precision)},
      {"offer_value", round_to(sol.benchmark.offer_value, precision)},
  };
  out["residuals"] = {
      {"foc", round_to(sol.foc_residual, precision)},
      {"constraint", round_to(sol.constraint_residual, precision)},
  };
  out["diagnostics"] = {
      {"iterations", sol.diagnostics.iterations},
      {"bracket_lo", round_to(sol.diagnostics.bracket_lo, precision)},
      {"bracket_hi", round_to(sol.diagnostics.bracket_hi, precision)},
      {"converged", sol.diagnostics.converged},
  };
  return out;
}

}  // namespace selectorate::cli
