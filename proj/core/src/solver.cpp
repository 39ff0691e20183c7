#include "selectorate/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "selectorate/root_find.hpp"

namespace selectorate {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Asymmetric:
      return "asymmetric";
    case Regime::Equal:
      return "equal";
    case Regime::General:
      return "general";
  }
  return "unknown";
}

void GeneralRegimeSpec::validate(const PolityParams& params) const {
  params.validate();
  const double floor = params.coalition / params.selectorate;
  if (!(retention_probability >= floor && retention_probability <= 1.0)) {
    std::ostringstream msg;
    msg << "retention probability must lie in [W/S, 1] = [" << floor
        << ", 1], got " << retention_probability;
    throw ValidationError(msg.str());
  }
}

namespace {

// Sentinel returned by the reduced residuals past the feasible arc (z <= 0),
// where the true residual diverges to -inf. Keeps the upper bracket endpoint
// usable without evaluating derivatives at zero.
constexpr double kInfeasibleResidual = -1e300;

double constraint_tolerance_for(double scale) {
  return std::max(kConstraintTolerance, 1e-14 * std::abs(scale));
}

// The reduced residuals are strictly positive left of the net-revenue peak
// (both FOC terms are nonnegative there and v_g > 0), so either the peak
// itself brackets from above or geometric descent finds a positive value.
double lower_bracket_s(const std::function<double(double)>& residual,
                       double peak_g, double s_hi) {
  if (peak_g > 0.0) {
    const double s_peak = std::sqrt(peak_g);
    if (s_peak < s_hi && residual(s_peak) > 0.0) return s_peak;
  }
  double s = 0.5 * s_hi;
  for (int i = 0; i < 4000 && s > 0.0; ++i) {
    if (residual(s) > 0.0) return s;
    s *= 0.5;
  }
  throw InfeasibleError(
      "no interior optimum: the reduced first-order condition never turns "
      "positive on the feasible arc");
}

struct ReducedSolve {
  BracketedRoot root{};
  double s_lo = 0.0;
  double s_hi = 0.0;
};

ReducedSolve solve_reduced(const std::function<double(double)>& residual,
                           double peak_g, double s_hi) {
  ReducedSolve out;
  out.s_lo = lower_bracket_s(residual, peak_g, s_hi);
  out.s_hi = s_hi;
  const double tol =
      8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, s_hi);
  out.root = root_find_bracketed(residual, out.s_lo, out.s_hi, tol);
  return out;
}

struct ChallengerSolve {
  Benchmark bench{};
  ReducedSolve reduced{};
};

ChallengerSolve solve_challenger_detail(const PolityParams& params,
                                        const FunctionFamily& fns) {
  params.validate();
  fns.validate();
  const double peak = net_revenue_peak_g(params, fns);
  const double g_hi = budget_exhaustion_g(params, fns);  // infeasibility gate
  auto residual = [&](double s) {
    const double g = s * s;
    const double z = z_from_budget(params, fns, g);
    if (!(z > 0.0)) return kInfeasibleResidual;
    return efoc_residual(params, fns, {g, z});
  };
  ChallengerSolve out;
  out.reduced = solve_reduced(residual, peak, std::sqrt(g_hi));
  const double g_hat = out.reduced.root.x * out.reduced.root.x;
  const double z_hat = z_from_budget(params, fns, g_hat);
  if (!(z_hat > 0.0))
    throw ConvergenceError(
        "challenger solve landed on the budget-exhaustion boundary");
  out.bench = Benchmark{g_hat, z_hat, fns.v(g_hat) + fns.u(z_hat)};
  return out;
}

void fill_diagnostics(EquilibriumSolution& sol, const ReducedSolve& reduced,
                      double constraint_scale) {
  sol.diagnostics.iterations = reduced.root.iterations;
  sol.diagnostics.bracket_lo = reduced.s_lo * reduced.s_lo;
  sol.diagnostics.bracket_hi = reduced.s_hi * reduced.s_hi;
  sol.diagnostics.converged =
      std::abs(sol.foc_residual) <= kFocTolerance &&
      std::abs(sol.constraint_residual) <=
          constraint_tolerance_for(constraint_scale);
}

EquilibriumSolution solve_with_select(const PolityParams& params,
                                      const FunctionFamily& fns, double rho,
                                      Regime regime) {
  const ChallengerSolve ch = solve_challenger_detail(params, fns);
  const double weight = select_weight(params, rho);
  // v(g) = offer_value is the far end of the binding-constraint arc.
  const double g_edge =
      std::pow(ch.bench.offer_value, 1.0 / fns.v_exponent);
  auto residual = [&](double s) {
    const double g = s * s;
    const double target = (ch.bench.offer_value - fns.v(g)) / weight;
    if (!(target > 0.0)) return kInfeasibleResidual;
    const double z = fns.u_inv(target);
    if (!(z > 0.0)) return kInfeasibleResidual;
    return foc_residual(params, fns, {g, z}, rho);
  };
  const double peak = net_revenue_peak_g(params, fns);
  const ReducedSolve reduced =
      solve_reduced(residual, peak, std::sqrt(g_edge));

  EquilibriumSolution sol;
  sol.regime = regime;
  sol.retention_probability = rho;
  const double g_star = reduced.root.x * reduced.root.x;
  const double z_star = z_from_select(params, fns, g_star, ch.bench, rho);
  sol.allocation = Allocation{g_star, z_star};
  sol.benchmark = ch.bench;
  sol.discretionary_resources = discretionary(params, fns, sol.allocation);
  sol.foc_residual = foc_residual(params, fns, sol.allocation, rho);
  sol.constraint_residual =
      select_residual(params, fns, sol.allocation, ch.bench, rho);
  fill_diagnostics(sol, reduced, ch.bench.offer_value);
  return sol;
}

}  // namespace

Benchmark solve_challenger(const PolityParams& params,
                           const FunctionFamily& fns) {
  return solve_challenger_detail(params, fns).bench;
}

EquilibriumSolution solve_equal(const PolityParams& params,
                                const FunctionFamily& fns) {
  const ChallengerSolve ch = solve_challenger_detail(params, fns);
  EquilibriumSolution sol;
  sol.regime = Regime::Equal;
  sol.retention_probability = params.coalition / params.selectorate;
  sol.allocation = Allocation{ch.bench.g_hat, ch.bench.z_hat};
  sol.benchmark = ch.bench;
  sol.discretionary_resources = discretionary(params, fns, sol.allocation);
  sol.foc_residual = efoc_residual(params, fns, sol.allocation);
  // The equal regime binds the budget, so budget slack is the constraint.
  sol.constraint_residual = sol.discretionary_resources;
  fill_diagnostics(sol, ch.reduced,
                   revenue(params, fns, ch.bench.g_hat));
  return sol;
}

EquilibriumSolution solve_asymmetric(const PolityParams& params,
                                     const FunctionFamily& fns) {
  return solve_with_select(params, fns, 1.0, Regime::Asymmetric);
}

EquilibriumSolution solve_general(const PolityParams& params,
                                  const FunctionFamily& fns,
                                  const GeneralRegimeSpec& spec) {
  spec.validate(params);
  return solve_with_select(params, fns, spec.retention_probability,
                           Regime::General);
}

Benchmark closed_form_equal_sqrt(const PolityParams& params) {
  params.validate();
  const FunctionFamily fns{};  // all exponents 0.5
  const double tax_scale = params.n_residents * params.tax_rate;
  const double p = params.public_price;
  const double w = params.coalition;
  const double b = tax_scale / p;
  const double c =
      (tax_scale * tax_scale - 4.0 * w * params.base_revenue) /
      (4.0 * p * (p + w));
  const double disc = b * b - 4.0 * c;
  if (!(disc >= 0.0))
    throw InfeasibleError(
        "no real root: the square-root reduction has negative discriminant");
  const double s = 0.5 * (b + std::sqrt(disc));
  const double t = (2.0 * p * s - tax_scale) / (2.0 * w);
  if (!(t > 0.0))
    throw InfeasibleError(
        "no feasible root: both quadratic roots imply nonpositive private "
        "goods");
  const double g = s * s;
  const double z = z_from_budget(params, fns, g);
  return Benchmark{g, z, fns.v(g) + fns.u(z)};
}

}  // namespace selectorate
