#include "cli/table.hpp"

#include <cmath>
#include <charconv>

#include "cli/version.hpp"

namespace radscat::cli {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "record") return Format::record;
  throw ConfigError("unknown format '" + name + "' (expected csv or record)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);  // shortest round-trip form
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const nlohmann::json& v) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string tolerance_text(const RunConfig& cfg) {
  std::string s;
  for (const auto& [name, value] : cfg.tolerances) {
    if (!s.empty()) s += ';';
    s += name + '=' + format_number(value);
  }
  return s;
}

// JSON has no inf/nan; they go out as strings.
nlohmann::json record_cell(const nlohmann::json& v) {
  if (v.is_number_float() && !std::isfinite(v.get<double>())) return format_number(v.get<double>());
  return v;
}

}  // namespace

void write_table(std::ostream& out, const Table& table, const RunConfig& cfg, Format format) {
  if (format == Format::csv) {
    out << "# radscat " << kVersion << " command=" << table.command << " config_hash=" << cfg.hash
        << " tolerances=" << tolerance_text(cfg) << '\n';
    for (const auto& w : table.warnings) out << "# warning: " << w << '\n';
    for (const auto& n : table.notes) out << "# note: " << n << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json rec;
  rec["tool"] = "radscat";
  rec["version"] = kVersion;
  rec["command"] = table.command;
  rec["config_hash"] = cfg.hash;
  rec["tolerances"] = cfg.tolerances;
  rec["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(record_cell(v));
    rows.push_back(r);
  }
  rec["rows"] = rows;
  rec["warnings"] = table.warnings;
  rec["notes"] = table.notes;
  out << rec.dump(2) << '\n';
}

}  // namespace radscat::cli
