#include "cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace radscat::cli {

namespace {

const nlohmann::json kEmpty = nlohmann::json::object();

std::vector<double> number_array(const nlohmann::json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "'");
  const auto& arr = obj.at(key);
  if (!arr.is_array()) throw ConfigError("'" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) throw ConfigError("'" + key + "' must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::map<std::string, double> default_tolerances() {
  return {{"unitarity", 1e-10},  {"proportionality", 1e-12}, {"criterion", 1e-10},
          {"root", 1e-12},       {"residue", 1e-6},          {"partner", 1e-8},
          {"tail", 1e-10},       {"continuity", 1e-10},      {"oracle", 1e-8},
          {"smeared_free", 1e-4}, {"smeared", 1e-3},         {"parseval", 1e-3}};
}

const nlohmann::json& RunConfig::section(const std::string& name) const {
  if (raw.contains(name)) return raw.at(name);
  return kEmpty;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double get_number(const nlohmann::json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("'" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError("'" + key + "' must be finite");
  return x;
}

std::size_t get_count(const nlohmann::json& obj, const std::string& key, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError("'" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string get_string(const nlohmann::json& obj, const std::string& key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_string()) throw ConfigError("'" + key + "' must be a string");
  return obj.at(key).get<std::string>();
}

bool get_bool(const nlohmann::json& obj, const std::string& key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) throw ConfigError("'" + key + "' must be true or false");
  return obj.at(key).get<bool>();
}

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
  RunConfig cfg;
  try {
    cfg.raw = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.raw.is_object()) throw ConfigError("config must be a JSON object");

  try {
    cfg.scale = PhysicalScale(get_number(cfg.raw, "kappa", 1.0));
    cfg.potential = Potential(number_array(cfg.raw, "breakpoints"), number_array(cfg.raw, "heights"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid potential: ") + e.what());
  }

  cfg.tolerances = default_tolerances();
  if (cfg.raw.contains("tolerances")) {
    const auto& tol = cfg.raw.at("tolerances");
    if (!tol.is_object()) throw ConfigError("'tolerances' must be an object");
    for (const auto& [name, value] : tol.items()) {
      if (!cfg.tolerances.contains(name)) throw ConfigError("unknown tolerance '" + name + "'");
      cfg.tolerances[name] = get_number(tol, name, 0.0);
    }
  }
  for (const std::string& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("--tolerance expects NAME=VALUE, got '" + o + "'");
    const std::string name = o.substr(0, eq);
    if (!cfg.tolerances.contains(name)) throw ConfigError("unknown tolerance '" + name + "'");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(o.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != o.size() - eq - 1 || !(value > 0.0) || !std::isfinite(value))
      throw ConfigError("tolerance '" + name + "' must be a positive number");
    cfg.tolerances[name] = value;
  }
  for (const auto& [name, value] : cfg.tolerances)
    if (!(value > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");

  nlohmann::json tol = cfg.tolerances;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(cfg.raw.dump() + "|" + tol.dump())));
  cfg.hash = buf;
  return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), overrides);
}

}  // namespace radscat::cli
