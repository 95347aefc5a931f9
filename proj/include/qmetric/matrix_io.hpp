#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qmetric/matrix.hpp"

namespace qmetric {

// File format: {"n_rows": r, "n_cols": c, "entries": [[re, im], ...]}, row-major.

nlohmann::json matrix_to_json(const Matrix& m);
/// Rejects missing fields, length mismatch and non-finite values with ValidationError.
Matrix matrix_from_json(const nlohmann::json& j);

Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

/// Serialized text with shortest round-trip formatting of every double.
std::string dump_json(const nlohmann::json& j, int indent = -1);

}  // namespace qmetric
