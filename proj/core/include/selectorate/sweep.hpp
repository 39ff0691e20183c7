#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "selectorate/solver.hpp"

namespace selectorate {

/// Which scalar the sweep varies. Retention probability rho is only
/// meaningful for rows solved in the general regime.
enum class VariedParameter {
  NResidents,
  Selectorate,
  Coalition,
  BaseRevenue,
  TaxRate,
  PublicPrice,
  Discount,
  RetentionProbability,
};

std::string to_string(VariedParameter parameter);
VariedParameter varied_parameter_from_string(const std::string& name);

struct SweepSpec {
  VariedParameter varied_parameter = VariedParameter::Coalition;
  double from_value = 0.0;
  double to_value = 0.0;
  std::size_t steps = 0;
  std::vector<Regime> regimes;
  /// Used by general-regime rows when rho itself is not the swept value.
  double retention_probability = 1.0;
  PolityParams base_params{};
  FunctionFamily fns{};

  /// from < to, steps >= 2, regimes nonempty, and the polity invariants hold
  /// at both endpoints (linear interpolation then keeps them everywhere).
  void validate() const;
};

/// Per-regime result of one row; failed solves carry the error text instead
/// of aborting the sweep.
struct RegimeOutcome {
  bool ok = false;
  EquilibriumSolution solution{};
  std::string error;
};

struct SweepRow {
  double param_value = 0.0;
  std::vector<RegimeOutcome> outcomes;  // index-aligned with spec.regimes
};

/// Row-aligned equal-minus-asymmetric differences; NaN where either regime
/// failed or was not requested. Positive entries mean the equal regime
/// allocates (or forgoes) more.
struct GapMetrics {
  std::vector<double> public_gap;
  std::vector<double> private_gap;
  std::vector<double> discretionary_gap;
};

struct SweepResult {
  SweepSpec spec{};
  std::vector<SweepRow> rows;
  GapMetrics gap_metrics{};
  std::size_t failed_rows = 0;
};

SweepResult sweep(const SweepSpec& spec);

/// How each gap series decays across the sweep: first and last defined
/// values, the fraction of consecutive defined pairs whose magnitude
/// strictly shrinks, and a flag for fraction == 1.
struct GapDecay {
  double first = 0.0;
  double last = 0.0;
  double shrink_fraction = 0.0;
  bool monotone = false;
};

struct GapDecayReport {
  GapDecay public_gap{};
  GapDecay private_gap{};
  GapDecay discretionary_gap{};
  std::size_t rows_used = 0;
};

/// Requires both the equal and asymmetric regimes with at least 3 rows where
/// both succeeded; InsufficientRowsError otherwise.
GapDecayReport detect_gap_decay(const SweepResult& result);

}  // namespace selectorate
