#pragma once

#include <string>

#include "selectorate/model.hpp"
#include "selectorate/types.hpp"

namespace selectorate {

enum class Regime { Asymmetric, Equal, General };

std::string to_string(Regime regime);

/// Where the coalition's retention chances sit between the two extremes:
/// rho = W/S reproduces equal uncertainty (members rate the incumbent no
/// better than a challenger), rho = 1 reproduces asymmetric uncertainty
/// (retention under the incumbent is certain).
struct GeneralRegimeSpec {
  double retention_probability = 1.0;

  /// Enforces W/S <= rho <= 1.
  void validate(const PolityParams& params) const;
};

struct SolverDiagnostics {
  int iterations = 0;
  double bracket_lo = 0.0;  // in g units
  double bracket_hi = 0.0;
  bool converged = false;
};

struct EquilibriumSolution {
  Regime regime = Regime::Equal;
  double retention_probability = 1.0;
  Allocation allocation{};
  double discretionary_resources = 0.0;
  Benchmark benchmark{};
  double foc_residual = 0.0;
  double constraint_residual = 0.0;
  SolverDiagnostics diagnostics{};
};

/// Residual tolerances a solution must meet to report converged = true.
/// The FOC tolerance is absolute; the constraint tolerance is absolute at
/// everyday revenue scales and widens proportionally for huge revenues where
/// double rounding alone exceeds it.
constexpr double kFocTolerance = 1e-10;
constexpr double kConstraintTolerance = 1e-9;

/// The challenger's program: maximize v(g) + u(z) on the binding budget.
/// Root of the equal-uncertainty FOC in s = sqrt(g), bracketed between the
/// net-revenue peak and budget exhaustion.
Benchmark solve_challenger(const PolityParams& params,
                           const FunctionFamily& fns);

/// Equal uncertainty: the leader must match the challenger, so the solution
/// is the challenger benchmark itself with zero discretionary resources.
EquilibriumSolution solve_equal(const PolityParams& params,
                                const FunctionFamily& fns);

/// Asymmetric uncertainty: maximize discretionary resources subject to the
/// binding retention constraint, via substituting z_from_select into the
/// asymmetric FOC and rooting in s = sqrt(g).
EquilibriumSolution solve_asymmetric(const PolityParams& params,
                                     const FunctionFamily& fns);

/// Retention-probability continuum between the two regimes. rho = 1 follows
/// the identical code path as solve_asymmetric; rho = W/S lands on the equal
/// solution through an independent reduction.
EquilibriumSolution solve_general(const PolityParams& params,
                                  const FunctionFamily& fns,
                                  const GeneralRegimeSpec& spec);

/// Analytic benchmark for the all-square-root family: the equal-uncertainty
/// FOC plus binding budget reduce to s^2 - (Nr/p) s + (N^2r^2 - 4WR)/(4p(p+W))
/// with s = sqrt(g); the larger root is the optimum (the smaller implies
/// negative private goods). Requires all three exponents to equal 0.5.
Benchmark closed_form_equal_sqrt(const PolityParams& params);

}  // namespace selectorate
