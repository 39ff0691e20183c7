#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

namespace {

using namespace selectorate;
using namespace selectorate::cli;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw Error("cannot open output file: " + path);
  stream << content;
  if (!stream) throw Error("failed while writing: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "selectorate: equilibrium solver and comparative statics for the "
      "selectorate model of political survival"};
  app.require_subcommand(1);

  std::string config_path, out_path, svg_path, format, regime;
  double rho = 1.0;
  int precision = 6;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "parameter file, key = value lines or a JSON object")
        ->required();
    cmd->add_option("--out", out_path,
                    "write the document here instead of stdout");
    cmd->add_option("--format", format, "document format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--svg", svg_path,
                    "sweep only: base path for the two provision plots");
    cmd->add_option("--regime", regime, "regime to solve")
        ->check(CLI::IsMember({"equal", "asymmetric", "general"}));
    cmd->add_option("--rho", rho,
                    "retention probability for the general regime");
    cmd->add_option("--precision", precision,
                    "decimal places in emitted numbers (2-15)");
  };

  add_common(app.add_subcommand("solve",
                                "solve one regime at fixed parameters"));
  add_common(app.add_subcommand(
      "sweep", "solve across a parameter range and emit rows and plots"));
  add_common(app.add_subcommand(
      "oracle", "cross-check the solver against the brute-force grid"));
  add_common(app.add_subcommand(
      "report", "reconcile solver and oracle output with the published "
                "reference values"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* active = app.get_subcommands().front();

  try {
    RunConfig config = load_config_file(config_path);
    if (active->count("--out")) config.out_path = out_path;
    if (active->count("--svg")) config.svg_path = svg_path;
    if (active->count("--format"))
      config.format =
          format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (active->count("--regime")) config.regime = regime_from_string(regime);
    if (active->count("--rho")) config.retention_probability = rho;
    if (active->count("--precision")) {
      if (precision < 2 || precision > 15)
        throw ConfigError("precision must lie between 2 and 15");
      config.precision = precision;
    }

    CommandResult result;
    const std::string name = active->get_name();
    if (name == "solve")
      result = run_solve(config);
    else if (name == "sweep")
      result = run_sweep(config);
    else if (name == "oracle")
      result = run_oracle(config);
    else
      result = run_report(config);

    for (const auto& [path, content] : result.extra_files)
      write_file(path, content);
    if (config.out_path.empty())
      std::cout << result.document;
    else
      write_file(config.out_path, result.document);
    if (!result.summary.empty()) std::cerr << result.summary << "\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
