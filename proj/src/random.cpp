#include <cmath>
#include <numbers>
#include <random>

#include "qmetric/kernels.hpp"
#include "qmetric/linalg.hpp"

namespace qmetric {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Box-Muller on raw mt19937_64 output; std::normal_distribution is not
// specified bit-for-bit across standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  Complex next() {
    const double u1 = unit_open();
    const double u2 = unit_open();
    const double radius = std::sqrt(-std::log(u1));  // variance 1/2 per component
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  double unit_open() {
    // 53 random bits mapped to (0, 1].
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
};

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial, std::uint64_t stream) {
  return splitmix64(splitmix64(base ^ trial) + stream);
}

Matrix random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  GaussianSource g(seed);
  Matrix m(rows, cols);
  for (auto& e : m.data()) e = g.next();
  return m;
}

HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  Matrix g = random_gaussian(n, n, seed);
  return HermitianMatrix((g + adjoint(g)) * 0.5);
}

Matrix random_unitary(std::size_t n, std::uint64_t seed) {
  // Columns as rows of qt so the projections run over contiguous storage.
  Matrix qt = adjoint(random_gaussian(n, n, seed));
  for (std::size_t j = 0; j < n; ++j) {
    auto col = qt.row(j);
    for (int pass = 0; pass < 2; ++pass) {  // twice is enough for orthogonality to rounding
      for (std::size_t i = 0; i < j; ++i) {
        const Complex proj = kernels::dotc(qt.row(i), col);
        auto prev = qt.row(i);
        for (std::size_t t = 0; t < n; ++t) col[t] -= proj * prev[t];
      }
    }
    // Positive real R_jj: divide by the norm only, no phase rotation.
    const double norm = std::sqrt(kernels::dotc(col, col).real());
    for (auto& e : col) e /= norm;
  }
  // qt holds conj of the columns of Q; adjoint returns Q itself.
  return adjoint(qt);
}

}  // namespace qmetric
