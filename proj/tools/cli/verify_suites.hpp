#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmetric::cli {

struct TrialRow {
  std::string suite;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trial = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs `trials` independent trials of an invariant sweep. Trial t draws its
/// inputs from derive_seed(seed, t, stream), so the rows (sorted by trial) do
/// not depend on `threads`. Throws ValidationError for an unusable (n, k).
std::vector<TrialRow> run_suite(const std::string& suite, std::size_t n, std::size_t k,
                                std::size_t trials, std::uint64_t seed, std::size_t threads = 1);

}  // namespace qmetric::cli
