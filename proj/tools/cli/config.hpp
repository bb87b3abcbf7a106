#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "radscat/potential.hpp"

namespace radscat::cli {

//! Anything wrong with the configuration or the command line: exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Named tolerances a run reports in its header and that --tolerance may override.
std::map<std::string, double> default_tolerances();

struct RunConfig {
  nlohmann::json raw;
  PhysicalScale scale;
  Potential potential = Potential::free();
  std::map<std::string, double> tolerances;
  std::string hash;  ///< FNV-1a 64 of the canonical JSON plus tolerances, hex

  //! Section for one command; an empty object when absent.
  const nlohmann::json& section(const std::string& name) const;
};

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

std::uint64_t fnv1a64(const std::string& bytes);

//! Reads `key` from an object, falling back to `fallback`; a present key of the wrong type is an error.
double get_number(const nlohmann::json& obj, const std::string& key, double fallback);
std::size_t get_count(const nlohmann::json& obj, const std::string& key, std::size_t fallback);
std::string get_string(const nlohmann::json& obj, const std::string& key, const std::string& fallback);
bool get_bool(const nlohmann::json& obj, const std::string& key, bool fallback);

}  // namespace radscat::cli
