#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "selectorate/model.hpp"
#include "selectorate/oracle.hpp"
#include "selectorate/solver.hpp"
#include "support/fixtures.hpp"

using namespace selectorate;
using namespace selectorate::testing;

namespace {
const PolityParams params = baseline_params();
const FunctionFamily fns = sqrt_family();
}  // namespace

TEST_CASE("challenger benchmark") {
  const Benchmark bench = solve_challenger(params, fns);
  CHECK(bench.g_hat == doctest::Approx(kEqualG).epsilon(1e-9));
  CHECK(bench.z_hat == doctest::Approx(kEqualZ).epsilon(1e-9));
  CHECK(bench.offer_value == doctest::Approx(kOfferValue).epsilon(1e-9));
  // The budget binds at the benchmark.
  CHECK(std::abs(discretionary(params, fns, {bench.g_hat, bench.z_hat})) <=
        1e-9);
  CHECK(std::abs(efoc_residual(params, fns, {bench.g_hat, bench.z_hat})) <=
        1e-10);
}

TEST_CASE("closed form for the all-square-root family") {
  const Benchmark closed = closed_form_equal_sqrt(params);
  // s^2 - 25 s + 59.5 = 0, larger root; g = 253 + 12.5 sqrt(387), z = 387/9.
  CHECK(closed.g_hat ==
        doctest::Approx(253.0 + 12.5 * std::sqrt(387.0)).epsilon(1e-13));
  CHECK(closed.z_hat == doctest::Approx(43.0).epsilon(1e-13));

  SUBCASE("two independent routes to one optimum") {
    const Benchmark solved = solve_challenger(params, fns);
    CHECK(closed.g_hat == doctest::Approx(solved.g_hat).epsilon(1e-9));
    CHECK(closed.z_hat == doctest::Approx(solved.z_hat).epsilon(1e-9));
    CHECK(closed.offer_value ==
          doctest::Approx(solved.offer_value).epsilon(1e-9));
  }

  SUBCASE("agreement holds away from the baseline coalition") {
    for (double w : {600.0, 2000.0, 9000.0}) {
      auto scaled = params;
      scaled.coalition = w;
      const Benchmark a = closed_form_equal_sqrt(scaled);
      const Benchmark b = solve_challenger(scaled, fns);
      CHECK(a.g_hat == doctest::Approx(b.g_hat).epsilon(1e-9));
      CHECK(a.z_hat == doctest::Approx(b.z_hat).epsilon(1e-8));
    }
  }

  SUBCASE("no taxes still reduces cleanly") {
    auto no_tax = params;
    no_tax.tax_rate = 0.0;
    const Benchmark a = closed_form_equal_sqrt(no_tax);
    const Benchmark b = solve_challenger(no_tax, fns);
    CHECK(a.g_hat == doctest::Approx(b.g_hat).epsilon(1e-9));
    CHECK(a.z_hat == doctest::Approx(b.z_hat).epsilon(1e-9));
  }

  SUBCASE("degenerate revenue is infeasible") {
    auto barren = params;
    barren.base_revenue = 0.0;
    barren.tax_rate = 0.0;
    CHECK_THROWS_AS(closed_form_equal_sqrt(barren), InfeasibleError);
  }
}

TEST_CASE("equal regime") {
  const EquilibriumSolution sol = solve_equal(params, fns);
  const Benchmark bench = solve_challenger(params, fns);
  CHECK(sol.regime == Regime::Equal);
  CHECK(sol.allocation.public_goods == bench.g_hat);
  CHECK(sol.allocation.private_goods == bench.z_hat);
  CHECK(std::abs(sol.discretionary_resources) <= 1e-9);
  CHECK(sol.constraint_residual == sol.discretionary_resources);
  CHECK(std::abs(sol.foc_residual) <= 1e-10);
  CHECK(sol.diagnostics.converged);
  CHECK(sol.diagnostics.iterations >= 1);
  CHECK(sol.diagnostics.iterations <= 200);
  CHECK(sol.diagnostics.bracket_lo <= sol.allocation.public_goods);
  CHECK(sol.diagnostics.bracket_hi >= sol.allocation.public_goods);
  CHECK(sol.retention_probability ==
        params.coalition / params.selectorate);
}

TEST_CASE("asymmetric regime") {
  const EquilibriumSolution sol = solve_asymmetric(params, fns);
  CHECK(sol.regime == Regime::Asymmetric);
  CHECK(sol.allocation.public_goods == doctest::Approx(kAsymG).epsilon(1e-9));
  CHECK(sol.allocation.private_goods ==
        doctest::Approx(kAsymZ).epsilon(1e-9));
  CHECK(sol.discretionary_resources ==
        doctest::Approx(kAsymD).epsilon(1e-9));
  CHECK(std::abs(afoc_residual(params, fns, sol.allocation)) <= 1e-10);
  CHECK(std::abs(select_residual(params, fns, sol.allocation,
                                 sol.benchmark)) <= 1e-9);
  CHECK(sol.discretionary_resources >= 0.0);
  CHECK(sol.diagnostics.converged);

  // Below the baseline coalition the asymmetric offer is smaller in both
  // goods than the equal offer.
  const EquilibriumSolution eq = solve_equal(params, fns);
  CHECK(sol.allocation.public_goods < eq.allocation.public_goods);
  CHECK(sol.allocation.private_goods < eq.allocation.private_goods);
}

TEST_CASE("coincidence at W = S") {
  auto merged = params;
  merged.coalition = merged.selectorate;
  const EquilibriumSolution asym = solve_asymmetric(merged, fns);
  const EquilibriumSolution eq = solve_equal(merged, fns);
  CHECK(asym.allocation.public_goods ==
        doctest::Approx(eq.allocation.public_goods).epsilon(1e-9));
  CHECK(asym.allocation.private_goods ==
        doctest::Approx(eq.allocation.private_goods).epsilon(1e-9));
  CHECK(std::abs(asym.discretionary_resources) <= 1e-8);
}

TEST_CASE("coincidence as delta vanishes") {
  auto myopic = params;
  myopic.discount = 1e-9;
  const EquilibriumSolution asym = solve_asymmetric(myopic, fns);
  const EquilibriumSolution eq = solve_equal(myopic, fns);
  CHECK(asym.allocation.public_goods ==
        doctest::Approx(eq.allocation.public_goods).epsilon(1e-4));
  CHECK(asym.allocation.private_goods ==
        doctest::Approx(eq.allocation.private_goods).epsilon(1e-4));
}

TEST_CASE("infeasible parameters are rejected") {
  auto barren = params;
  barren.base_revenue = 0.0;
  barren.tax_rate = 0.0;
  CHECK_THROWS_AS(solve_challenger(barren, fns), InfeasibleError);
  CHECK_THROWS_AS(solve_equal(barren, fns), InfeasibleError);
  CHECK_THROWS_AS(solve_asymmetric(barren, fns), InfeasibleError);
  CHECK_THROWS_AS(
      solve_general(barren, fns, GeneralRegimeSpec{1.0}), InfeasibleError);
}

TEST_CASE("general regime endpoints") {
  const EquilibriumSolution asym = solve_asymmetric(params, fns);
  const EquilibriumSolution at_one =
      solve_general(params, fns, GeneralRegimeSpec{1.0});
  // Same code path: the endpoint identity is exact.
  CHECK(at_one.allocation.public_goods == asym.allocation.public_goods);
  CHECK(at_one.allocation.private_goods == asym.allocation.private_goods);
  CHECK(at_one.discretionary_resources == asym.discretionary_resources);
  CHECK(at_one.regime == Regime::General);

  const double floor = params.coalition / params.selectorate;
  const EquilibriumSolution eq = solve_equal(params, fns);
  const EquilibriumSolution at_floor =
      solve_general(params, fns, GeneralRegimeSpec{floor});
  // Different reduction (constraint substitution vs budget substitution),
  // same optimum.
  CHECK(at_floor.allocation.public_goods ==
        doctest::Approx(eq.allocation.public_goods).epsilon(1e-9));
  CHECK(at_floor.allocation.private_goods ==
        doctest::Approx(eq.allocation.private_goods).epsilon(1e-9));
  CHECK(std::abs(at_floor.discretionary_resources) <= 1e-8);
}

TEST_CASE("general regime interior") {
  const EquilibriumSolution asym = solve_asymmetric(params, fns);
  const EquilibriumSolution eq = solve_equal(params, fns);
  const EquilibriumSolution mid =
      solve_general(params, fns, GeneralRegimeSpec{0.5});
  CHECK(mid.allocation.public_goods > asym.allocation.public_goods);
  CHECK(mid.allocation.public_goods < eq.allocation.public_goods);
  CHECK(mid.allocation.private_goods > asym.allocation.private_goods);
  CHECK(mid.allocation.private_goods < eq.allocation.private_goods);
  CHECK(mid.discretionary_resources > 0.0);
  CHECK(mid.discretionary_resources < asym.discretionary_resources);

  // Discretionary resources grow with the retention probability: the
  // constraint set is nested increasing in rho.
  double previous = -1.0;
  for (int i = 0; i <= 4; ++i) {
    const double rho = 0.03 + (1.0 - 0.03) * i / 4.0;
    const EquilibriumSolution sol =
        solve_general(params, fns, GeneralRegimeSpec{rho});
    CHECK(sol.discretionary_resources >= previous - 1e-9);
    previous = sol.discretionary_resources;
  }
}

TEST_CASE("general regime validation") {
  CHECK_THROWS_AS(solve_general(params, fns, GeneralRegimeSpec{0.01}),
                  ValidationError);
  CHECK_THROWS_AS(solve_general(params, fns, GeneralRegimeSpec{1.2}),
                  ValidationError);
  CHECK_NOTHROW(solve_general(params, fns, GeneralRegimeSpec{0.03}));
  CHECK_NOTHROW(solve_general(params, fns, GeneralRegimeSpec{1.0}));
}

TEST_CASE("determinism") {
  const EquilibriumSolution a = solve_asymmetric(params, fns);
  const EquilibriumSolution b = solve_asymmetric(params, fns);
  CHECK(a.allocation.public_goods == b.allocation.public_goods);
  CHECK(a.allocation.private_goods == b.allocation.private_goods);
  CHECK(a.discretionary_resources == b.discretionary_resources);
  CHECK(a.foc_residual == b.foc_residual);
  CHECK(a.constraint_residual == b.constraint_residual);
  CHECK(a.diagnostics.iterations == b.diagnostics.iterations);
}

TEST_CASE("solver agrees with the grid oracle at the baseline") {
  const EquilibriumSolution eq = solve_equal(params, fns);
  const Allocation oracle_eq = oracle_grid_maximize(
      params, fns, OracleConstraint::budget_binding(), 2000);
  CHECK(close_rel(oracle_eq.public_goods, eq.allocation.public_goods, 1e-3));
  CHECK(close_rel(oracle_eq.private_goods, eq.allocation.private_goods, 1e-3));

  const EquilibriumSolution asym = solve_asymmetric(params, fns);
  const Allocation oracle_asym = oracle_grid_maximize(
      params, fns, OracleConstraint::select_binding(1.0), 2000);
  CHECK(close_rel(oracle_asym.public_goods, asym.allocation.public_goods,
                  1e-3));
  CHECK(close_rel(oracle_asym.private_goods, asym.allocation.private_goods,
                  1e-3));
}

// KKT sanity: perturbing g by 1% along the binding constraint strictly
// lowers the regime objective on both sides.
TEST_CASE("perturbation along the binding constraint loses value") {
  const EquilibriumSolution eq = solve_equal(params, fns);
  const double g_eq = eq.allocation.public_goods;
  const auto equal_objective = [&](double g) {
    return fns.v(g) + fns.u(z_from_budget(params, fns, g));
  };
  CHECK(equal_objective(g_eq) > equal_objective(g_eq * 1.01));
  CHECK(equal_objective(g_eq) > equal_objective(g_eq * 0.99));

  const EquilibriumSolution asym = solve_asymmetric(params, fns);
  const double g_as = asym.allocation.public_goods;
  const auto asym_objective = [&](double g) {
    const double z = z_from_select(params, fns, g, asym.benchmark);
    return discretionary(params, fns, {g, z});
  };
  CHECK(asym_objective(g_as) > asym_objective(g_as * 1.01));
  CHECK(asym_objective(g_as) > asym_objective(g_as * 0.99));
}
