#pragma once

#include <string>
#include <vector>

#include "selectorate/solver.hpp"
#include "selectorate/sweep.hpp"

namespace selectorate::cli {

/// Configuration problems (unreadable file, malformed line, missing or
/// unknown key, out-of-range setting). Mapped to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { Json, Csv };

struct SweepBlock {
  bool present = false;
  VariedParameter parameter = VariedParameter::Coalition;
  double from_value = 0.0;
  double to_value = 0.0;
  std::size_t steps = 0;
  std::vector<Regime> regimes = {Regime::Equal, Regime::Asymmetric};
  bool has_parameter = false;
  bool has_from = false;
  bool has_to = false;
  bool has_steps = false;
};

/// One run of the tool: polity parameters, function family, regime
/// selection, optional sweep block and output settings. Parsed from a flat
/// `key = value` file or a JSON object with the same keys.
struct RunConfig {
  PolityParams params{};
  FunctionFamily fns{};
  Regime regime = Regime::Asymmetric;
  double retention_probability = 1.0;
  SweepBlock sweep{};
  std::size_t oracle_resolution = 4000;
  OutputFormat format = OutputFormat::Json;
  std::string out_path;
  std::string svg_path;
  int precision = 6;
};

Regime regime_from_string(const std::string& name);

/// Parses either config syntax; a leading '{' selects JSON. Throws
/// ConfigError with the offending key or line in the message.
RunConfig parse_config_text(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace selectorate::cli
