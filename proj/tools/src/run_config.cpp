#include "run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace selectorate::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError("value of '" + key + "' is not a number: " + value);
  return parsed;
}

long parse_long(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long parsed = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError("value of '" + key + "' is not an integer: " + value);
  return parsed;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::string token = trim(item);
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

// Flat key -> value map, shared by both syntaxes.
RunConfig from_entries(const std::map<std::string, std::string>& entries) {
  RunConfig config;
  std::set<std::string> seen;

  const auto get = [&](const char* key) -> const std::string* {
    const auto it = entries.find(key);
    if (it == entries.end()) return nullptr;
    seen.insert(key);
    return &it->second;
  };
  const auto number = [&](const char* key, double& target) {
    if (const std::string* raw = get(key)) target = parse_double(key, *raw);
  };

  // Polity parameters are the only required keys.
  for (const char* key : {"N", "S", "W", "R", "r", "p", "delta"}) {
    if (entries.find(key) == entries.end())
      throw ConfigError(std::string("missing required field: ") + key);
  }
  number("N", config.params.n_residents);
  number("S", config.params.selectorate);
  number("W", config.params.coalition);
  number("R", config.params.base_revenue);
  number("r", config.params.tax_rate);
  number("p", config.params.public_price);
  number("delta", config.params.discount);

  number("v_exponent", config.fns.v_exponent);
  number("u_exponent", config.fns.u_exponent);
  number("phi_exponent", config.fns.phi_exponent);
  number("rho", config.retention_probability);

  if (const std::string* raw = get("regime"))
    config.regime = regime_from_string(*raw);
  if (const std::string* raw = get("precision")) {
    const long precision = parse_long("precision", *raw);
    if (precision < 2 || precision > 15)
      throw ConfigError("precision must lie between 2 and 15, got " + *raw);
    config.precision = static_cast<int>(precision);
  }
  if (const std::string* raw = get("format")) {
    if (*raw == "json")
      config.format = OutputFormat::Json;
    else if (*raw == "csv")
      config.format = OutputFormat::Csv;
    else
      throw ConfigError("format must be 'json' or 'csv', got " + *raw);
  }
  if (const std::string* raw = get("out")) config.out_path = *raw;
  if (const std::string* raw = get("svg")) config.svg_path = *raw;
  if (const std::string* raw = get("oracle_resolution")) {
    const long resolution = parse_long("oracle_resolution", *raw);
    if (resolution < 2)
      throw ConfigError("oracle_resolution must be at least 2, got " + *raw);
    config.oracle_resolution = static_cast<std::size_t>(resolution);
  }

  if (const std::string* raw = get("sweep_parameter")) {
    config.sweep.present = true;
    config.sweep.has_parameter = true;
    try {
      config.sweep.parameter = varied_parameter_from_string(*raw);
    } catch (const ValidationError& e) {
      throw ConfigError(e.what());
    }
  }
  if (const std::string* raw = get("sweep_from")) {
    config.sweep.present = true;
    config.sweep.has_from = true;
    config.sweep.from_value = parse_double("sweep_from", *raw);
  }
  if (const std::string* raw = get("sweep_to")) {
    config.sweep.present = true;
    config.sweep.has_to = true;
    config.sweep.to_value = parse_double("sweep_to", *raw);
  }
  if (const std::string* raw = get("sweep_steps")) {
    config.sweep.present = true;
    config.sweep.has_steps = true;
    const long steps = parse_long("sweep_steps", *raw);
    if (steps < 2)
      throw ConfigError("sweep_steps must be at least 2, got " + *raw);
    config.sweep.steps = static_cast<std::size_t>(steps);
  }
  if (const std::string* raw = get("sweep_regimes")) {
    config.sweep.present = true;
    config.sweep.regimes.clear();
    for (const std::string& token : split_list(*raw))
      config.sweep.regimes.push_back(regime_from_string(token));
    if (config.sweep.regimes.empty())
      throw ConfigError("sweep_regimes must name at least one regime");
  }

  for (const auto& [key, value] : entries) {
    if (seen.find(key) == seen.end())
      throw ConfigError("unknown config key: " + key);
  }

  try {
    config.params.validate();
    config.fns.validate();
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
  return config;
}

RunConfig parse_key_value(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::stringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto equals = line.find('=');
    if (equals == std::string::npos) {
      std::ostringstream msg;
      msg << "malformed config line " << line_number
          << ": expected 'key = value'";
      throw ConfigError(msg.str());
    }
    const std::string key = trim(line.substr(0, equals));
    const std::string value = trim(line.substr(equals + 1));
    if (key.empty())
      throw ConfigError("empty key on config line " +
                        std::to_string(line_number));
    if (entries.count(key))
      throw ConfigError("duplicate config key: " + key);
    entries[key] = value;
  }
  return from_entries(entries);
}

RunConfig parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("JSON config must be an object");
  std::map<std::string, std::string> entries;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_string())
      entries[key] = value.get<std::string>();
    else if (value.is_number_integer())
      entries[key] = std::to_string(value.get<long long>());
    else if (value.is_number())
      entries[key] = nlohmann::json(value).dump();
    else if (value.is_boolean())
      entries[key] = value.get<bool>() ? "true" : "false";
    else
      throw ConfigError("config key '" + key +
                        "' must be a scalar, got: " + value.dump());
  }
  return from_entries(entries);
}

}  // namespace

Regime regime_from_string(const std::string& name) {
  if (name == "equal") return Regime::Equal;
  if (name == "asymmetric") return Regime::Asymmetric;
  if (name == "general") return Regime::General;
  throw ConfigError(
      "regime must be 'equal', 'asymmetric' or 'general', got " + name);
}

RunConfig parse_config_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_json(text);
  return parse_key_value(text);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace selectorate::cli
