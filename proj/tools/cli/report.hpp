#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace qmetric::cli {

enum class OutputFormat { text, json, csv };

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

/// Outcome of one command. JSON layout:
///   {"command", "args", "version", "kernels", "seed", "checks": [...],
///    "passed", "wall_time_s", ...command-specific fields}
/// Everything except "wall_time_s" is a deterministic function of the arguments.
struct Report {
  std::string command;
  nlohmann::json args = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  nlohmann::json fields = nlohmann::json::object();
  double wall_time_s = 0.0;

  /// Tabular payload for CSV output (and the text table): header plus rows.
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  void add_check(std::string name, double residual, double tolerance);
  void add_check(std::string name, bool pass, double residual, double tolerance);
  [[nodiscard]] bool passed() const;
  [[nodiscard]] nlohmann::json to_json() const;
  void write(std::ostream& out, OutputFormat format) const;
};

/// 17 significant digits.
std::string format_number(double v);

}  // namespace qmetric::cli
