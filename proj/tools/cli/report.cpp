#include "cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "qmetric/kernels.hpp"

namespace qmetric::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Report::add_check(std::string name, double residual, double tolerance) {
  add_check(std::move(name), residual <= tolerance, residual, tolerance);
}

void Report::add_check(std::string name, bool pass, double residual, double tolerance) {
  checks.push_back({std::move(name), pass, residual, tolerance});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json j = fields;
  j["command"] = command;
  j["args"] = args;
  j["version"] = QMETRIC_VERSION;
  j["kernels"] = std::string(kernels::name(kernels::active()));
  j["seed"] = seed;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name},
                  {"status", c.pass ? "pass" : "fail"},
                  {"residual", c.residual},
                  {"tolerance", c.tolerance}});
  }
  j["checks"] = std::move(cs);
  j["passed"] = passed();
  j["wall_time_s"] = wall_time_s;
  return j;
}

void Report::write(std::ostream& out, OutputFormat format) const {
  switch (format) {
    case OutputFormat::json:
      out << to_json().dump(2) << '\n';
      return;
    case OutputFormat::csv: {
      if (csv_header.empty()) {
        out << "name,status,residual,tolerance\n";
        for (const auto& c : checks) {
          out << c.name << ',' << (c.pass ? "pass" : "fail") << ',' << format_number(c.residual)
              << ',' << format_number(c.tolerance) << '\n';
        }
        return;
      }
      for (std::size_t i = 0; i < csv_header.size(); ++i) out << (i ? "," : "") << csv_header[i];
      out << '\n';
      for (const auto& row : csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
      }
      return;
    }
    case OutputFormat::text:
      break;
  }

  out << "qmetric " << QMETRIC_VERSION << " | " << command << " | seed " << seed << " | kernels "
      << kernels::name(kernels::active()) << '\n';
  for (const auto& [key, value] : fields.items()) {
    if (value.is_object() || value.is_array()) continue;
    out << "  " << std::left << std::setw(18) << key << ' ' << value.dump() << '\n';
  }
  if (!csv_rows.empty()) {
    std::vector<std::size_t> widths(csv_header.size());
    for (std::size_t i = 0; i < csv_header.size(); ++i) widths[i] = csv_header[i].size();
    for (const auto& row : csv_rows)
      for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    auto emit = [&](const std::vector<std::string>& row) {
      out << "  ";
      for (std::size_t i = 0; i < row.size(); ++i) out << std::left << std::setw(int(widths[i]) + 2) << row[i];
      out << '\n';
    };
    emit(csv_header);
    constexpr std::size_t kMaxTextRows = 50;
    for (std::size_t r = 0; r < csv_rows.size() && r < kMaxTextRows; ++r) emit(csv_rows[r]);
    if (csv_rows.size() > kMaxTextRows) out << "  ... " << csv_rows.size() - kMaxTextRows << " more rows (use --csv)\n";
  }
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << std::left << std::setw(28) << c.name
        << " residual " << std::setw(12) << std::setprecision(4) << c.residual << " <= " << c.tolerance
        << '\n';
  }
  out << "  " << (checks.size() - failed) << "/" << checks.size() << " checks passed, "
      << std::setprecision(3) << wall_time_s << " s\n";
}

}  // namespace qmetric::cli
