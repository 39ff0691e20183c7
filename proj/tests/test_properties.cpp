#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "selectorate/model.hpp"
#include "selectorate/oracle.hpp"
#include "selectorate/solver.hpp"
#include "support/fixtures.hpp"

using namespace selectorate;
using namespace selectorate::testing;

TEST_CASE("solver matches the grid oracle across random polities") {
  ParamSampler sampler(20240901);
  for (int trial = 0; trial < 100; ++trial) {
    const PolityParams p = sampler.params();
    const FunctionFamily f = sampler.matched_family();
    CAPTURE(trial);
    CAPTURE(p.coalition);
    CAPTURE(p.public_price);

    const EquilibriumSolution eq = solve_equal(p, f);
    const OracleRun budget = oracle_grid_maximize_run(
        p, f, OracleConstraint::budget_binding(), 400);
    CHECK(std::abs(budget.best.public_goods - eq.allocation.public_goods) <=
          3.0 * budget.cell_g + 1e-9);
    CHECK(std::abs(budget.best.private_goods - eq.allocation.private_goods) <=
          3.0 * budget.cell_z + 1e-9);

    const EquilibriumSolution asym = solve_asymmetric(p, f);
    const OracleRun select = oracle_grid_maximize_run(
        p, f, OracleConstraint::select_binding(1.0), 400);
    CHECK(std::abs(select.best.public_goods -
                   asym.allocation.public_goods) <=
          3.0 * select.cell_g + 1e-9);
    CHECK(std::abs(select.best.private_goods -
                   asym.allocation.private_goods) <=
          3.0 * select.cell_z + 1e-9);

    const double floor = p.coalition / p.selectorate;
    const double rho = floor + (1.0 - floor) * sampler.uniform(0.1, 0.9);
    const EquilibriumSolution general =
        solve_general(p, f, GeneralRegimeSpec{rho});
    const OracleRun mid = oracle_grid_maximize_run(
        p, f, OracleConstraint::select_binding(rho), 400);
    CHECK(std::abs(mid.best.public_goods -
                   general.allocation.public_goods) <=
          3.0 * mid.cell_g + 1e-9);
    CHECK(std::abs(mid.best.private_goods -
                   general.allocation.private_goods) <=
          3.0 * mid.cell_z + 1e-9);
  }
}

TEST_CASE("regime ordering for public goods and hoarding") {
  ParamSampler sampler(7771234);
  for (int trial = 0; trial < 150; ++trial) {
    const PolityParams p = sampler.params();
    const FunctionFamily f = sampler.matched_family();
    CAPTURE(trial);
    const EquilibriumSolution eq = solve_equal(p, f);
    const EquilibriumSolution asym = solve_asymmetric(p, f);
    // Equal uncertainty leaves nothing on the table; asymmetric uncertainty
    // lets the leader hoard and always concede less public goods.
    CHECK(std::abs(eq.discretionary_resources) <= 1e-9);
    CHECK(asym.discretionary_resources >= -1e-9);
    CHECK(asym.allocation.public_goods <=
          eq.allocation.public_goods * (1.0 + 1e-12) + 1e-12);
    CHECK(eq.diagnostics.converged);
    CHECK(asym.diagnostics.converged);
  }
}

// For the all-square-root family the private-goods comparison has a sharp
// closed form: z_asym exceeds z_equal exactly when W * kappa > p, with
// kappa = (1-delta) S / (S - delta W). The crossover for the baseline
// polity sits at W = p S / ((1-delta) S + delta p) = 433.84.
TEST_CASE("private-goods ordering flips where W * kappa crosses p") {
  const FunctionFamily f = sqrt_family();

  SUBCASE("fixed coalitions straddling the crossover") {
    for (double w : {300.0, 420.0, 450.0, 600.0, 1000.0, 9000.0}) {
      auto p = baseline_params();
      p.coalition = w;
      const double margin = p.coalition * afoc_coefficient(p) -
                            p.public_price;
      const EquilibriumSolution eq = solve_equal(p, f);
      const EquilibriumSolution asym = solve_asymmetric(p, f);
      CAPTURE(w);
      if (margin < 0.0) {
        CHECK(asym.allocation.private_goods < eq.allocation.private_goods);
      } else {
        CHECK(asym.allocation.private_goods > eq.allocation.private_goods);
      }
    }
  }

  SUBCASE("random polities") {
    ParamSampler sampler(404142);
    int above = 0, below = 0;
    for (int trial = 0; trial < 120; ++trial) {
      PolityParams p = sampler.params();
      const double margin =
          p.coalition * afoc_coefficient(p) - p.public_price;
      if (std::abs(margin) < 1e-3 * p.public_price) continue;  // knife edge
      const EquilibriumSolution eq = solve_equal(p, f);
      const EquilibriumSolution asym = solve_asymmetric(p, f);
      CAPTURE(trial);
      if (margin < 0.0) {
        ++below;
        CHECK(asym.allocation.private_goods < eq.allocation.private_goods);
      } else {
        ++above;
        CHECK(asym.allocation.private_goods > eq.allocation.private_goods);
      }
    }
    // Both sides of the law must actually get exercised.
    CHECK(above >= 5);
    CHECK(below >= 5);
  }
}

TEST_CASE("constraint slope matches finite differences") {
  ParamSampler sampler(31415926);
  for (int set = 0; set < 10; ++set) {
    const PolityParams p = sampler.params();
    const FunctionFamily f = sampler.matched_family();
    const Benchmark bench = solve_challenger(p, f);
    const double g_edge = std::pow(bench.offer_value, 1.0 / f.v_exponent);
    for (int point = 0; point < 10; ++point) {
      const double g = g_edge * sampler.uniform(0.05, 0.9);
      const double h = 1e-4 * g;
      const double analytic = dz_dg_select(p, f, g, bench);
      const double fd = (z_from_select(p, f, g + h, bench) -
                         z_from_select(p, f, g - h, bench)) /
                        (2.0 * h);
      CAPTURE(set);
      CAPTURE(point);
      CHECK(std::abs(analytic - fd) <= 1e-6 * std::abs(analytic));
    }
  }
}

TEST_CASE("constraint inversion round-trips") {
  ParamSampler sampler(55555);
  for (int set = 0; set < 10; ++set) {
    const PolityParams p = sampler.params();
    const FunctionFamily f = sampler.matched_family();
    const Benchmark bench = solve_challenger(p, f);
    const double g_edge = std::pow(bench.offer_value, 1.0 / f.v_exponent);
    double prev_g = -1.0, prev_z = 0.0;
    for (int point = 0; point < 10; ++point) {
      const double g = g_edge * (0.05 + 0.9 * point / 9.0);
      const double z = z_from_select(p, f, g, bench);
      CHECK(std::abs(select_residual(p, f, {g, z}, bench)) <= 1e-9);
      if (prev_g >= 0.0 && g > prev_g) {
        CHECK(z < prev_z);  // strictly decreasing along the constraint
      }
      prev_g = g;
      prev_z = z;
    }
  }
}

TEST_CASE("budget curve is concave and peaks where marginal revenue is p") {
  ParamSampler sampler(987654321);
  for (int set = 0; set < 20; ++set) {
    const PolityParams p = sampler.params();
    const FunctionFamily f = sampler.matched_family();
    const double peak = net_revenue_peak_g(p, f);
    REQUIRE(peak > 0.0);
    const double marginal =
        p.n_residents * p.tax_rate * f.phi_g(peak);
    CHECK(close_rel(marginal, p.public_price, 1e-9));
    CHECK(z_from_budget(p, f, peak) >=
          z_from_budget(p, f, peak * 1.001) - 1e-12);
    CHECK(z_from_budget(p, f, peak) >=
          z_from_budget(p, f, peak * 0.999) - 1e-12);
    // Midpoint concavity across the feasible range.
    const double hi = budget_exhaustion_g(p, f);
    for (int k = 0; k < 10; ++k) {
      const double a = sampler.uniform(0.0, hi);
      const double b = sampler.uniform(0.0, hi);
      const double mid = 0.5 * (a + b);
      CHECK(z_from_budget(p, f, mid) >=
            0.5 * (z_from_budget(p, f, a) + z_from_budget(p, f, b)) -
                1e-9 * std::max(1.0, std::abs(z_from_budget(p, f, mid))));
    }
  }
}

TEST_CASE("asymmetric and equal conditions coincide pointwise at W = S") {
  ParamSampler sampler(1234321);
  for (int trial = 0; trial < 100; ++trial) {
    PolityParams p = sampler.params();
    p.coalition = p.selectorate;
    const FunctionFamily f = sampler.matched_family();
    const Allocation alloc{sampler.uniform(1.0, 500.0),
                           sampler.uniform(0.1, 100.0)};
    CHECK(std::abs(afoc_residual(p, f, alloc) -
                   efoc_residual(p, f, alloc)) <= 1e-12);
  }
}

TEST_CASE("stream values stay consistent with the retention residual") {
  ParamSampler sampler(24681012);
  for (int trial = 0; trial < 50; ++trial) {
    const PolityParams p = sampler.params();
    const FunctionFamily f = sampler.matched_family();
    const Benchmark bench = solve_challenger(p, f);
    const Allocation alloc{sampler.uniform(1.0, bench.g_hat * 1.5),
                           sampler.uniform(0.01, bench.z_hat * 1.5)};
    const double diff = incumbent_stream_value(p, f, alloc) -
                        credible_challenger_value(p, f, bench, alloc);
    const double residual = select_residual(p, f, alloc, bench);
    CHECK(close_rel(diff, residual, 1e-10));
    if (std::abs(residual) >
        1e-10 * std::max(1.0, std::abs(bench.offer_value))) {
      CHECK((diff > 0.0) == (residual > 0.0));
    }
  }
}

TEST_CASE("general regime interpolates and stays ordered in rho") {
  ParamSampler sampler(1357911);
  for (int trial = 0; trial < 25; ++trial) {
    const PolityParams p = sampler.params();
    const FunctionFamily f = sampler.matched_family();
    const double floor = p.coalition / p.selectorate;
    double prev_d = -1.0;
    double prev_g = 1e300;
    for (int k = 0; k <= 6; ++k) {
      const double rho = k == 6 ? 1.0 : floor + (1.0 - floor) * k / 6.0;
      const EquilibriumSolution sol =
          solve_general(p, f, GeneralRegimeSpec{rho});
      CHECK(sol.discretionary_resources >= prev_d - 1e-9);
      CHECK(sol.allocation.public_goods <= prev_g + 1e-9);
      prev_d = sol.discretionary_resources;
      prev_g = sol.allocation.public_goods;
    }
  }
}
