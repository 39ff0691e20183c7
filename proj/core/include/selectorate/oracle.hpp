#pragma once

#include <cstddef>
#include <functional>

#include "selectorate/types.hpp"

namespace selectorate {

enum class OracleConstraintKind { BudgetBinding, SelectBinding };

/// Which program the grid oracle brute-forces: the challenger/equal program
/// (maximize v+u over the budget set) or the leader's program under the
/// retention constraint at a given rho (maximize discretionary resources).
struct OracleConstraint {
  OracleConstraintKind kind = OracleConstraintKind::BudgetBinding;
  double retention_probability = 1.0;

  static OracleConstraint budget_binding() {
    return {OracleConstraintKind::BudgetBinding, 1.0};
  }
  static OracleConstraint select_binding(double rho) {
    return {OracleConstraintKind::SelectBinding, rho};
  }
};

/// Exhaustive evaluation of the regime's objective over every feasible cell
/// of a (g, z) grid covering the whole feasible box (plus, per g column, the
/// exact binding-constraint point, so the curve cannot alias against the
/// lattice), followed by one local refinement pass of the same resolution
/// around the best coarse cell. Ties broken toward the lexicographically
/// smallest (g, z) cell index. For the strictly concave programs here the
/// result is within one refined grid cell of the true optimum once
/// resolution >= 100. Never consults the solvers: the select-binding
/// benchmark value is taken from the oracle's own budget-binding pass.
Allocation oracle_grid_maximize(const PolityParams& params,
                                const FunctionFamily& fns,
                                const OracleConstraint& constraint,
                                std::size_t resolution);

/// Same computation with the refined cell sizes exposed, so tests can assert
/// the one-cell guarantee instead of a scale-blind tolerance.
struct OracleRun {
  Allocation best{};
  double objective = 0.0;
  double cell_g = 0.0;  // refined grid spacing
  double cell_z = 0.0;
};

OracleRun oracle_grid_maximize_run(const PolityParams& params,
                                   const FunctionFamily& fns,
                                   const OracleConstraint& constraint,
                                   std::size_t resolution);

/// Plain single-pass grid maximization of an arbitrary objective over the
/// feasible cells of a box. Used by the oracle internals' tests; exposed
/// because a brute-force argmax is handy wherever a known-good baseline is
/// needed.
struct GridBox {
  double x_lo = 0.0, x_hi = 0.0;
  double y_lo = 0.0, y_hi = 0.0;
};

struct GridBest {
  bool found = false;
  double x = 0.0, y = 0.0;
  double value = 0.0;
  std::size_t xi = 0, yi = 0;
};

GridBest grid_maximize(const std::function<double(double, double)>& objective,
                       const std::function<bool(double, double)>& feasible,
                       const GridBox& box, std::size_t resolution);

}  // namespace selectorate
