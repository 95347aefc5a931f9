#include "qmetric/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qmetric/error.hpp"

namespace qmetric {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (const auto& e : m.data()) entries.push_back(json::array({e.real(), e.imag()}));
  return json{{"n_rows", m.rows()}, {"n_cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("matrix file: top level must be an object");
  for (const char* key : {"n_rows", "n_cols", "entries"}) {
    if (!j.contains(key)) throw ValidationError(std::string("matrix file: missing field \"") + key + "\"");
  }
  const auto& jr = j.at("n_rows");
  const auto& jc = j.at("n_cols");
  if (!jr.is_number_unsigned() || !jc.is_number_unsigned()) {
    throw ValidationError("matrix file: n_rows and n_cols must be positive integers");
  }
  const auto rows = jr.get<std::size_t>();
  const auto cols = jc.get<std::size_t>();
  if (rows == 0 || cols == 0) throw ValidationError("matrix file: n_rows and n_cols must be positive");
  const auto& je = j.at("entries");
  if (!je.is_array()) throw ValidationError("matrix file: entries must be an array");
  if (je.size() != rows * cols) {
    throw ValidationError("matrix file: expected " + std::to_string(rows * cols) +
                          " entries, found " + std::to_string(je.size()));
  }
  std::vector<Complex> entries;
  entries.reserve(je.size());
  for (std::size_t i = 0; i < je.size(); ++i) {
    const auto& e = je[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError("matrix file: entry " + std::to_string(i) + " must be [re, im]");
    }
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ValidationError("matrix file: entry " + std::to_string(i) + " is not finite");
    }
    entries.emplace_back(re, im);
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("matrix file " + path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write matrix file " + path.string());
  out << dump_json(matrix_to_json(m)) << '\n';
}

std::string dump_json(const json& j, int indent) { return j.dump(indent); }

}  // namespace qmetric
