#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"

namespace radscat::cli {

enum class Format { csv, record };

Format parse_format(const std::string& name);

//! Rows of numbers/strings/bools plus free-text notes (warnings, summaries).
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows{};
  std::vector<std::string> warnings{};
  std::vector<std::string> notes{};
};

//! CSV: "# radscat <version> ..." header line, "# warning:"/"# note:" lines, column
//! header, rows. Record: one JSON object with the same content.
void write_table(std::ostream& out, const Table& table, const RunConfig& cfg, Format format);

std::string format_number(double x);

}  // namespace radscat::cli
