#include "selectorate/sweep.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace selectorate {

std::string to_string(VariedParameter parameter) {
  switch (parameter) {
    case VariedParameter::NResidents:
      return "N";
    case VariedParameter::Selectorate:
      return "S";
    case VariedParameter::Coalition:
      return "W";
    case VariedParameter::BaseRevenue:
      return "R";
    case VariedParameter::TaxRate:
      return "r";
    case VariedParameter::PublicPrice:
      return "p";
    case VariedParameter::Discount:
      return "delta";
    case VariedParameter::RetentionProbability:
      return "rho";
  }
  return "unknown";
}

VariedParameter varied_parameter_from_string(const std::string& name) {
  if (name == "N") return VariedParameter::NResidents;
  if (name == "S") return VariedParameter::Selectorate;
  if (name == "W") return VariedParameter::Coalition;
  if (name == "R") return VariedParameter::BaseRevenue;
  if (name == "r") return VariedParameter::TaxRate;
  if (name == "p") return VariedParameter::PublicPrice;
  if (name == "delta") return VariedParameter::Discount;
  if (name == "rho") return VariedParameter::RetentionProbability;
  throw ValidationError("unknown sweep parameter name: " + name);
}

namespace {

PolityParams with_value(PolityParams params, VariedParameter which,
                        double value) {
  switch (which) {
    case VariedParameter::NResidents:
      params.n_residents = value;
      break;
    case VariedParameter::Selectorate:
      params.selectorate = value;
      break;
    case VariedParameter::Coalition:
      params.coalition = value;
      break;
    case VariedParameter::BaseRevenue:
      params.base_revenue = value;
      break;
    case VariedParameter::TaxRate:
      params.tax_rate = value;
      break;
    case VariedParameter::PublicPrice:
      params.public_price = value;
      break;
    case VariedParameter::Discount:
      params.discount = value;
      break;
    case VariedParameter::RetentionProbability:
      break;  // rho lives outside PolityParams
  }
  return params;
}

}  // namespace

void SweepSpec::validate() const {
  base_params.validate();
  fns.validate();
  if (!(from_value < to_value))
    throw ValidationError("sweep range must satisfy from < to");
  if (steps < 2) throw ValidationError("sweep needs at least 2 steps");
  if (regimes.empty())
    throw ValidationError("sweep needs at least one regime");
  // Invariants are interval constraints field by field, so holding at both
  // endpoints means holding at every interpolated value.
  if (varied_parameter == VariedParameter::RetentionProbability) {
    GeneralRegimeSpec{from_value}.validate(base_params);
    GeneralRegimeSpec{to_value}.validate(base_params);
  } else {
    with_value(base_params, varied_parameter, from_value).validate();
    with_value(base_params, varied_parameter, to_value).validate();
  }
}

SweepResult sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult result;
  result.spec = spec;
  result.rows.reserve(spec.steps);
  const double span = spec.to_value - spec.from_value;
  for (std::size_t i = 0; i < spec.steps; ++i) {
    SweepRow row;
    row.param_value =
        (i + 1 == spec.steps)
            ? spec.to_value
            : spec.from_value + span * static_cast<double>(i) /
                                    static_cast<double>(spec.steps - 1);
    const PolityParams params =
        with_value(spec.base_params, spec.varied_parameter, row.param_value);
    const double rho =
        spec.varied_parameter == VariedParameter::RetentionProbability
            ? row.param_value
            : spec.retention_probability;
    bool row_failed = false;
    for (const Regime regime : spec.regimes) {
      RegimeOutcome outcome;
      try {
        switch (regime) {
          case Regime::Equal:
            outcome.solution = solve_equal(params, spec.fns);
            break;
          case Regime::Asymmetric:
            outcome.solution = solve_asymmetric(params, spec.fns);
            break;
          case Regime::General:
            outcome.solution =
                solve_general(params, spec.fns, GeneralRegimeSpec{rho});
            break;
        }
        outcome.ok = true;
      } catch (const Error& e) {
        outcome.ok = false;
        outcome.error = e.what();
        row_failed = true;
      }
      row.outcomes.push_back(std::move(outcome));
    }
    if (row_failed) ++result.failed_rows;
    result.rows.push_back(std::move(row));
  }

  // Equal-minus-asymmetric gaps, NaN where undefined.
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::ptrdiff_t idx_equal = -1, idx_asym = -1;
  for (std::size_t k = 0; k < spec.regimes.size(); ++k) {
    if (spec.regimes[k] == Regime::Equal) idx_equal = k;
    if (spec.regimes[k] == Regime::Asymmetric) idx_asym = k;
  }
  for (const SweepRow& row : result.rows) {
    double pub = nan, priv = nan, disc = nan;
    if (idx_equal >= 0 && idx_asym >= 0 && row.outcomes[idx_equal].ok &&
        row.outcomes[idx_asym].ok) {
      const EquilibriumSolution& eq = row.outcomes[idx_equal].solution;
      const EquilibriumSolution& as = row.outcomes[idx_asym].solution;
      pub = eq.allocation.public_goods - as.allocation.public_goods;
      priv = eq.allocation.private_goods - as.allocation.private_goods;
      disc = eq.discretionary_resources - as.discretionary_resources;
    }
    result.gap_metrics.public_gap.push_back(pub);
    result.gap_metrics.private_gap.push_back(priv);
    result.gap_metrics.discretionary_gap.push_back(disc);
  }
  return result;
}

namespace {

GapDecay decay_of(const std::vector<double>& series) {
  GapDecay decay;
  std::size_t pairs = 0, shrinking = 0;
  bool have_prev = false;
  double prev = 0.0;
  bool have_first = false;
  for (const double value : series) {
    if (std::isnan(value)) continue;
    if (!have_first) {
      decay.first = value;
      have_first = true;
    }
    decay.last = value;
    if (have_prev) {
      ++pairs;
      const double tol =
          1e-9 * std::max({1.0, std::abs(prev), std::abs(value)});
      if (std::abs(value) < std::abs(prev) - tol) ++shrinking;
    }
    prev = value;
    have_prev = true;
  }
  decay.shrink_fraction =
      pairs == 0 ? 0.0
                 : static_cast<double>(shrinking) / static_cast<double>(pairs);
  decay.monotone = pairs > 0 && shrinking == pairs;
  return decay;
}

}  // namespace

GapDecayReport detect_gap_decay(const SweepResult& result) {
  bool has_equal = false, has_asym = false;
  for (const Regime regime : result.spec.regimes) {
    has_equal = has_equal || regime == Regime::Equal;
    has_asym = has_asym || regime == Regime::Asymmetric;
  }
  if (!has_equal || !has_asym)
    throw InsufficientRowsError(
        "gap decay needs both the equal and asymmetric regimes");
  std::size_t valid = 0;
  for (const double g : result.gap_metrics.public_gap)
    if (!std::isnan(g)) ++valid;
  if (valid < 3) {
    std::ostringstream msg;
    msg << "gap decay needs at least 3 successful rows, got " << valid;
    throw InsufficientRowsError(msg.str());
  }
  GapDecayReport report;
  report.rows_used = valid;
  report.public_gap = decay_of(result.gap_metrics.public_gap);
  report.private_gap = decay_of(result.gap_metrics.private_gap);
  report.discretionary_gap = decay_of(result.gap_metrics.discretionary_gap);
  return report;
}

}  // namespace selectorate
