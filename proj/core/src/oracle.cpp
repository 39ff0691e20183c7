#include "selectorate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "selectorate/model.hpp"
#include "selectorate/solver.hpp"

namespace selectorate {

GridBest grid_maximize(const std::function<double(double, double)>& objective,
                       const std::function<bool(double, double)>& feasible,
                       const GridBox& box, std::size_t resolution) {
  if (resolution < 2)
    throw ValidationError("grid resolution must be at least 2");
  const double x_step =
      (box.x_hi - box.x_lo) / static_cast<double>(resolution);
  const double y_step =
      (box.y_hi - box.y_lo) / static_cast<double>(resolution);
  GridBest best;
  for (std::size_t i = 0; i <= resolution; ++i) {
    const double x = box.x_lo + x_step * static_cast<double>(i);
    for (std::size_t j = 0; j <= resolution; ++j) {
      const double y = box.y_lo + y_step * static_cast<double>(j);
      if (!feasible(x, y)) continue;
      const double value = objective(x, y);
      if (!best.found || value > best.value) {
        best = GridBest{true, x, y, value, i, j};
      }
    }
  }
  return best;
}

namespace {

struct Axis {
  double lo = 0.0;
  double step = 0.0;
  std::size_t cells = 0;

  double at(std::size_t i) const {
    return lo + step * static_cast<double>(i);
  }
};

Axis make_axis(double lo, double hi, std::size_t cells) {
  return Axis{lo, (hi - lo) / static_cast<double>(cells), cells};
}

struct ScanBest {
  bool found = false;
  double g = 0.0, z = 0.0;
  double value = 0.0;
};

void consider(ScanBest& best, double g, double z, double value) {
  if (!best.found || value > best.value) {
    best = ScanBest{true, g, z, value};
  }
}

// Both programs put their optimum on the binding constraint, which never
// falls exactly on a rectangular lattice; the per-column overshoot would
// alias against the curve and drag the argmax sideways. So each column
// evaluates every lattice cell plus the exact boundary point of that column.
// Function values are cached per axis (the objective and the feasibility
// test are separable sums), keeping the scan to additions and comparisons.
// First strictly-greater value wins, i.e. the lexicographically smallest
// (g, z) index on ties.

ScanBest scan_budget(const PolityParams& params, const FunctionFamily& fns,
                     const Axis& ga, const Axis& za) {
  std::vector<double> u_of_z(za.cells + 1), zs(za.cells + 1);
  for (std::size_t j = 0; j <= za.cells; ++j) {
    zs[j] = za.at(j);
    u_of_z[j] = fns.u(zs[j]);
  }
  ScanBest best;
  for (std::size_t i = 0; i <= ga.cells; ++i) {
    const double g = ga.at(i);
    const double v_i = fns.v(g);
    const double cap = z_from_budget(params, fns, g);
    if (cap < 0.0) continue;  // the whole column overspends
    for (std::size_t j = 0; j <= za.cells; ++j) {
      if (zs[j] > cap) continue;
      consider(best, g, zs[j], v_i + u_of_z[j]);
    }
    consider(best, g, cap, v_i + fns.u(cap));
  }
  return best;
}

ScanBest scan_select(const PolityParams& params, const FunctionFamily& fns,
                     double offer_value, double weight, const Axis& ga,
                     const Axis& za) {
  std::vector<double> u_of_z(za.cells + 1), zs(za.cells + 1);
  for (std::size_t j = 0; j <= za.cells; ++j) {
    zs[j] = za.at(j);
    u_of_z[j] = fns.u(zs[j]);
  }
  ScanBest best;
  for (std::size_t i = 0; i <= ga.cells; ++i) {
    const double g = ga.at(i);
    const double v_i = fns.v(g);
    const double net_i =
        revenue(params, fns, g) - params.public_price * g;
    for (std::size_t j = 0; j <= za.cells; ++j) {
      if (v_i + weight * u_of_z[j] < offer_value) continue;  // Select < 0
      consider(best, g, zs[j], net_i - params.coalition * zs[j]);
    }
    const double target = (offer_value - v_i) / weight;
    if (target > 0.0) {
      const double z_bound = fns.u_inv(target);
      consider(best, g, z_bound, net_i - params.coalition * z_bound);
    }
  }
  return best;
}

// One coarse pass over the whole box, then one refined pass of the same
// resolution around the best coarse column. The refined z range follows the
// constraint boundary across the g window so the binding point stays inside.
template <typename Scan, typename Boundary>
OracleRun two_pass(const GridBox& box, std::size_t resolution,
                   const Scan& scan, const Boundary& boundary) {
  const Axis ga = make_axis(box.x_lo, box.x_hi, resolution);
  const Axis za = make_axis(box.y_lo, box.y_hi, resolution);
  const ScanBest coarse = scan(ga, za);
  if (!coarse.found) throw InfeasibleError("the feasible grid is empty");

  const double g_lo = std::max(box.x_lo, coarse.g - ga.step);
  const double g_hi = std::min(box.x_hi, coarse.g + ga.step);
  const double z_edge_lo = boundary(g_lo);
  const double z_edge_hi = boundary(g_hi);
  const double z_min = std::min({coarse.z, z_edge_lo, z_edge_hi});
  const double z_max = std::max({coarse.z, z_edge_lo, z_edge_hi});
  const double z_lo = std::max(box.y_lo, z_min - za.step);
  const double z_hi = std::min(box.y_hi, z_max + za.step);

  const Axis ga_fine = make_axis(g_lo, g_hi, resolution);
  const Axis za_fine = make_axis(z_lo, z_hi, resolution);
  const ScanBest fine = scan(ga_fine, za_fine);
  OracleRun run;
  run.best = Allocation{fine.g, fine.z};
  run.objective = fine.value;
  run.cell_g = ga_fine.step;
  run.cell_z = za_fine.step;
  return run;
}

OracleRun run_budget_binding(const PolityParams& params,
                             const FunctionFamily& fns,
                             std::size_t resolution) {
  const double peak = net_revenue_peak_g(params, fns);
  const double z_hi = z_from_budget(params, fns, peak);
  if (!(z_hi > 0.0))
    throw InfeasibleError(
        "the feasible grid is empty: no positive private-goods capacity");
  const double g_hi = budget_exhaustion_g(params, fns);
  const GridBox box{0.0, g_hi, 0.0, z_hi};
  return two_pass(
      box, resolution,
      [&](const Axis& ga, const Axis& za) {
        return scan_budget(params, fns, ga, za);
      },
      [&](double g) {
        return std::max(0.0, z_from_budget(params, fns, g));
      });
}

OracleRun run_select_binding(const PolityParams& params,
                             const FunctionFamily& fns, double rho,
                             std::size_t resolution) {
  GeneralRegimeSpec{rho}.validate(params);
  // The oracle derives its own benchmark from the budget-binding grid so the
  // select pass never leans on the root-finding solver.
  const OracleRun bench = run_budget_binding(params, fns, resolution);
  const double offer_value =
      fns.v(bench.best.public_goods) + fns.u(bench.best.private_goods);
  const double weight = select_weight(params, rho);
  const double g_hi = std::pow(offer_value, 1.0 / fns.v_exponent);
  const double z_hi = fns.u_inv(offer_value / weight);
  const GridBox box{0.0, g_hi, 0.0, z_hi};
  return two_pass(
      box, resolution,
      [&](const Axis& ga, const Axis& za) {
        return scan_select(params, fns, offer_value, weight, ga, za);
      },
      [&](double g) {
        const double target = (offer_value - fns.v(g)) / weight;
        return target > 0.0 ? fns.u_inv(target) : 0.0;
      });
}

}  // namespace

OracleRun oracle_grid_maximize_run(const PolityParams& params,
                                   const FunctionFamily& fns,
                                   const OracleConstraint& constraint,
                                   std::size_t resolution) {
  params.validate();
  fns.validate();
  if (resolution < 2)
    throw ValidationError("grid resolution must be at least 2");
  switch (constraint.kind) {
    case OracleConstraintKind::BudgetBinding:
      return run_budget_binding(params, fns, resolution);
    case OracleConstraintKind::SelectBinding:
      return run_select_binding(params, fns,
                                constraint.retention_probability, resolution);
  }
  throw ValidationError("unknown oracle constraint kind");
}

Allocation oracle_grid_maximize(const PolityParams& params,
                                const FunctionFamily& fns,
                                const OracleConstraint& constraint,
                                std::size_t resolution) {
  return oracle_grid_maximize_run(params, fns, constraint, resolution).best;
}

}  // namespace selectorate
