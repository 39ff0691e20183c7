#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "emit.hpp"
#include "reference.hpp"
#include "selectorate/model.hpp"
#include "selectorate/oracle.hpp"
#include "selectorate/sweep.hpp"
#include "svg.hpp"

namespace selectorate::cli {

namespace {

EquilibriumSolution solve_for(const RunConfig& config) {
  switch (config.regime) {
    case Regime::Equal:
      return solve_equal(config.params, config.fns);
    case Regime::Asymmetric:
      return solve_asymmetric(config.params, config.fns);
    case Regime::General:
      return solve_general(config.params, config.fns,
                           GeneralRegimeSpec{config.retention_probability});
  }
  throw ConfigError("unknown regime");
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json triple_json(double g, double z, double discretionary, int precision) {
  Json out;
  out["g"] = round_to(g, precision);
  out["z"] = round_to(z, precision);
  out["discretionary"] = round_to(discretionary, precision);
  return out;
}

double guarded_relative_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::string svg_variant_path(const std::string& base,
                             const std::string& suffix) {
  const auto dot = base.find_last_of('.');
  const auto slash = base.find_last_of('/');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash)) {
    return base + "_" + suffix + ".svg";
  }
  return base.substr(0, dot) + "_" + suffix + base.substr(dot);
}

const char* regime_color(Regime regime) {
  switch (regime) {
    case Regime::Equal:
      return "#1f6fb4";
    case Regime::Asymmetric:
      return "#d1495b";
    case Regime::General:
      return "#3a7d44";
  }
  return "#444444";
}

}  // namespace

CommandResult run_solve(const RunConfig& config) {
  const EquilibriumSolution sol = solve_for(config);
  CommandResult result;
  if (config.format == OutputFormat::Json) {
    Json doc;
    doc["command"] = "solve";
    doc["params"] = params_json(config.params, config.precision);
    doc["functions"] = functions_json(config.fns, config.precision);
    doc["solution"] = solution_json(sol, config.precision);
    result.document = dump(doc);
  } else {
    std::ostringstream csv;
    csv << "regime,g_star,z_star,discretionary,g_hat,z_hat,offer_value,"
           "foc_residual,constraint_residual,iterations,converged\n";
    const int p = config.precision;
    csv << to_string(sol.regime) << ','
        << format_fixed(sol.allocation.public_goods, p) << ','
        << format_fixed(sol.allocation.private_goods, p) << ','
        << format_fixed(sol.discretionary_resources, p) << ','
        << format_fixed(sol.benchmark.g_hat, p) << ','
        << format_fixed(sol.benchmark.z_hat, p) << ','
        << format_fixed(sol.benchmark.offer_value, p) << ','
        << format_fixed(sol.foc_residual, p) << ','
        << format_fixed(sol.constraint_residual, p) << ','
        << sol.diagnostics.iterations << ','
        << (sol.diagnostics.converged ? "true" : "false") << '\n';
    result.document = csv.str();
  }
  result.exit_code = sol.diagnostics.converged ? 0 : 3;
  return result;
}

namespace {

SweepSpec sweep_spec_from(const RunConfig& config) {
  if (!config.sweep.present || !config.sweep.has_parameter ||
      !config.sweep.has_from || !config.sweep.has_to ||
      !config.sweep.has_steps) {
    throw ConfigError(
        "sweep requires sweep_parameter, sweep_from, sweep_to and "
        "sweep_steps");
  }
  SweepSpec spec;
  spec.varied_parameter = config.sweep.parameter;
  spec.from_value = config.sweep.from_value;
  spec.to_value = config.sweep.to_value;
  spec.steps = config.sweep.steps;
  for (const Regime regime : config.sweep.regimes) {
    if (std::find(spec.regimes.begin(), spec.regimes.end(), regime) ==
        spec.regimes.end())
      spec.regimes.push_back(regime);
  }
  spec.retention_probability = config.retention_probability;
  spec.base_params = config.params;
  spec.fns = config.fns;
  return spec;
}

std::string sweep_csv(const SweepResult& result, int precision) {
  std::ostringstream csv;
  csv << "param_value,regime,g_star,z_star,discretionary,foc_residual,"
         "constraint_residual,converged\n";
  for (const SweepRow& row : result.rows) {
    for (std::size_t k = 0; k < result.spec.regimes.size(); ++k) {
      const RegimeOutcome& outcome = row.outcomes[k];
      csv << format_fixed(row.param_value, precision) << ','
          << to_string(result.spec.regimes[k]) << ',';
      if (outcome.ok) {
        const EquilibriumSolution& sol = outcome.solution;
        csv << format_fixed(sol.allocation.public_goods, precision) << ','
            << format_fixed(sol.allocation.private_goods, precision) << ','
            << format_fixed(sol.discretionary_resources, precision) << ','
            << format_fixed(sol.foc_residual, precision) << ','
            << format_fixed(sol.constraint_residual, precision) << ','
            << (sol.diagnostics.converged ? "true" : "false") << '\n';
      } else {
        csv << "nan,nan,nan,nan,nan,false\n";
      }
    }
  }
  return csv.str();
}

Json gap_array(const std::vector<double>& gaps, int precision) {
  Json arr = Json::array();
  for (const double gap : gaps) {
    if (std::isnan(gap))
      arr.push_back(nullptr);
    else
      arr.push_back(round_to(gap, precision));
  }
  return arr;
}

Json sweep_json(const SweepResult& result, int precision) {
  Json doc;
  doc["command"] = "sweep";
  doc["parameter"] = to_string(result.spec.varied_parameter);
  doc["from"] = round_to(result.spec.from_value, precision);
  doc["to"] = round_to(result.spec.to_value, precision);
  doc["steps"] = result.spec.steps;
  Json regimes = Json::array();
  for (const Regime regime : result.spec.regimes)
    regimes.push_back(to_string(regime));
  doc["regimes"] = regimes;
  doc["params"] = params_json(result.spec.base_params, precision);
  doc["functions"] = functions_json(result.spec.fns, precision);
  Json rows = Json::array();
  for (const SweepRow& row : result.rows) {
    Json row_doc;
    row_doc["param_value"] = round_to(row.param_value, precision);
    for (std::size_t k = 0; k < result.spec.regimes.size(); ++k) {
      const std::string key = to_string(result.spec.regimes[k]);
      const RegimeOutcome& outcome = row.outcomes[k];
      if (outcome.ok) {
        const EquilibriumSolution& sol = outcome.solution;
        row_doc[key] = {
            {"g_star", round_to(sol.allocation.public_goods, precision)},
            {"z_star", round_to(sol.allocation.private_goods, precision)},
            {"discretionary",
             round_to(sol.discretionary_resources, precision)},
            {"foc_residual", round_to(sol.foc_residual, precision)},
            {"constraint_residual",
             round_to(sol.constraint_residual, precision)},
            {"converged", sol.diagnostics.converged},
        };
      } else {
        row_doc[key] = {{"error", outcome.error}};
      }
    }
    rows.push_back(row_doc);
  }
  doc["rows"] = rows;
  doc["gap_metrics"] = {
      {"public_gap", gap_array(result.gap_metrics.public_gap, precision)},
      {"private_gap", gap_array(result.gap_metrics.private_gap, precision)},
      {"discretionary_gap",
       gap_array(result.gap_metrics.discretionary_gap, precision)},
  };
  doc["failed_rows"] = result.failed_rows;
  return doc;
}

std::vector<SvgSeries> sweep_series(const SweepResult& result,
                                    bool public_goods) {
  std::vector<SvgSeries> series;
  for (std::size_t k = 0; k < result.spec.regimes.size(); ++k) {
    SvgSeries s;
    s.label = to_string(result.spec.regimes[k]);
    s.color = regime_color(result.spec.regimes[k]);
    for (const SweepRow& row : result.rows) {
      if (!row.outcomes[k].ok) continue;
      const Allocation& alloc = row.outcomes[k].solution.allocation;
      s.points.emplace_back(row.param_value, public_goods
                                                 ? alloc.public_goods
                                                 : alloc.private_goods);
    }
    series.push_back(std::move(s));
  }
  return series;
}

}  // namespace

CommandResult run_sweep(const RunConfig& config) {
  const SweepSpec spec = sweep_spec_from(config);
  const SweepResult result = sweep(spec);

  CommandResult out;
  if (config.format == OutputFormat::Csv)
    out.document = sweep_csv(result, config.precision);
  else
    out.document = dump(sweep_json(result, config.precision));

  if (!config.svg_path.empty()) {
    const std::string x_label = to_string(spec.varied_parameter);
    out.extra_files.emplace_back(
        svg_variant_path(config.svg_path, "public_goods"),
        line_chart_svg("Optimal public-good provision", x_label,
                       "public goods g*", sweep_series(result, true)));
    out.extra_files.emplace_back(
        svg_variant_path(config.svg_path, "private_goods"),
        line_chart_svg("Optimal private-good provision", x_label,
                       "private goods z*", sweep_series(result, false)));
  }

  if (result.failed_rows > 0) {
    std::ostringstream summary;
    summary << "sweep: " << result.failed_rows << " of " << result.rows.size()
            << " rows failed";
    out.summary = summary.str();
    out.exit_code = 4;
  }
  return out;
}

CommandResult run_oracle(const RunConfig& config) {
  const EquilibriumSolution sol = solve_for(config);
  const OracleConstraint constraint =
      config.regime == Regime::Equal
          ? OracleConstraint::budget_binding()
          : OracleConstraint::select_binding(
                config.regime == Regime::General
                    ? config.retention_probability
                    : 1.0);
  const OracleRun oracle = oracle_grid_maximize_run(
      config.params, config.fns, constraint, config.oracle_resolution);
  const double oracle_discretionary =
      discretionary(config.params, config.fns, oracle.best);

  const double deviation = std::max(
      {guarded_relative_deviation(sol.allocation.public_goods,
                                  oracle.best.public_goods),
       guarded_relative_deviation(sol.allocation.private_goods,
                                  oracle.best.private_goods),
       guarded_relative_deviation(sol.discretionary_resources,
                                  oracle_discretionary)});

  Json doc;
  doc["command"] = "oracle";
  doc["regime"] = to_string(sol.regime);
  doc["retention_probability"] =
      round_to(sol.retention_probability, config.precision);
  doc["resolution"] = config.oracle_resolution;
  doc["params"] = params_json(config.params, config.precision);
  doc["solver"] = triple_json(sol.allocation.public_goods,
                              sol.allocation.private_goods,
                              sol.discretionary_resources, config.precision);
  doc["oracle"] =
      triple_json(oracle.best.public_goods, oracle.best.private_goods,
                  oracle_discretionary, config.precision);
  // Deviation keeps full precision; rounding it could hide a failure.
  doc["max_relative_deviation"] = deviation;
  doc["within_tolerance"] = deviation <= 1e-3;

  CommandResult out;
  out.document = dump(doc);
  out.exit_code = deviation <= 1e-3 ? 0 : 1;
  return out;
}

namespace {

Json report_section(const RunConfig& config, Regime regime) {
  const PolityParams& params = config.params;
  const FunctionFamily& fns = config.fns;
  const int precision = config.precision;

  const EquilibriumSolution sol = regime == Regime::Equal
                                      ? solve_equal(params, fns)
                                      : solve_asymmetric(params, fns);
  const OracleConstraint constraint =
      regime == Regime::Equal ? OracleConstraint::budget_binding()
                              : OracleConstraint::select_binding(1.0);
  const OracleRun oracle = oracle_grid_maximize_run(
      params, fns, constraint, config.oracle_resolution);

  Json section;
  section["solver"] =
      triple_json(sol.allocation.public_goods, sol.allocation.private_goods,
                  sol.discretionary_resources, precision);
  section["solver"]["foc_residual"] = round_to(sol.foc_residual, precision);
  section["solver"]["constraint_residual"] =
      round_to(sol.constraint_residual, precision);
  section["oracle"] = triple_json(
      oracle.best.public_goods, oracle.best.private_goods,
      discretionary(params, fns, oracle.best), precision);

  if (matches_reference_setup(params, fns)) {
    const ReferenceTriple ref = regime == Regime::Equal
                                    ? kEqualReference
                                    : kAsymmetricReference;
    const Allocation at_ref{ref.g, ref.z};
    Json reference;
    reference["g"] = ref.g;
    reference["z"] = ref.z;
    reference["discretionary"] = ref.discretionary;
    reference["residuals_at_reference"] = {
        {"efoc", round_to(efoc_residual(params, fns, at_ref), precision)},
        {"afoc", round_to(afoc_residual(params, fns, at_ref), precision)},
        {"select", round_to(select_residual(params, fns, at_ref,
                                            sol.benchmark),
                            precision)},
    };
    // Leftover resources the budget itself would grant at the reference
    // point; negative means the reference point overspends the budget.
    reference["budget_slack_at_reference"] =
        round_to(discretionary(params, fns, at_ref), precision);
    const bool g_ok = guarded_relative_deviation(
                          ref.g, sol.allocation.public_goods) <= 0.01;
    const bool z_ok = guarded_relative_deviation(
                          ref.z, sol.allocation.private_goods) <= 0.01;
    const bool d_ok = guarded_relative_deviation(
                          ref.discretionary,
                          sol.discretionary_resources) <= 0.01;
    reference["agreement_with_solver"] = {
        {"g", g_ok},
        {"z", z_ok},
        {"discretionary", d_ok},
        {"all", g_ok && z_ok && d_ok},
    };
    section["reference"] = reference;
  }
  return section;
}

}  // namespace

CommandResult run_report(const RunConfig& config) {
  Json doc;
  doc["command"] = "report";
  doc["params"] = params_json(config.params, config.precision);
  doc["functions"] = functions_json(config.fns, config.precision);
  doc["reference_parameterization"] =
      matches_reference_setup(config.params, config.fns);
  doc["regimes"] = {
      {"asymmetric", report_section(config, Regime::Asymmetric)},
      {"equal", report_section(config, Regime::Equal)},
  };
  CommandResult out;
  out.document = dump(doc);
  return out;
}

}  // namespace selectorate::cli
