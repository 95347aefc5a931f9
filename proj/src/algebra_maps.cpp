#include "qmetric/algebra_maps.hpp"

#include <string>

#include "qmetric/error.hpp"
#include "qmetric/kernels.hpp"

namespace qmetric {

namespace {

void require_size(const DivisorPair& pair, const Matrix& a, std::size_t expected, const char* op) {
  if (!a.is_square() || a.rows() != expected) {
    throw DimensionError(std::string(op) + ": expected a " + std::to_string(expected) + "x" +
                         std::to_string(expected) + " matrix for pair (k=" +
                         std::to_string(pair.k()) + ", n=" + std::to_string(pair.n()) +
                         "), got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

DivisorPair::DivisorPair(std::size_t k, std::size_t n) : k_(k), n_(n) {
  if (k == 0 || n == 0 || k > n) {
    throw ValidationError("divisor pair requires 1 <= k <= n (k=" + std::to_string(k) +
                          ", n=" + std::to_string(n) + ")");
  }
  if (n % k != 0) {
    throw ValidationError("k must divide n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= n; ++k) {
    if (n % k == 0) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> proper_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 2; k < n; ++k) {
    if (n % k == 0) out.push_back(k);
  }
  return out;
}

BlockDecomposition diagonal_blocks(const DivisorPair& pair, const Matrix& a) {
  require_size(pair, a, pair.n(), "diagonal_blocks");
  const std::size_t k = pair.k();
  BlockDecomposition out{pair, {}};
  out.blocks.reserve(pair.copies());
  for (std::size_t r = 0; r < pair.copies(); ++r) {
    Matrix block(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) block(i, j) = a(r * k + i, r * k + j);
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

Matrix embed(const DivisorPair& pair, const Matrix& a) {
  require_size(pair, a, pair.k(), "embed");
  const std::size_t k = pair.k();
  const std::size_t n = pair.n();
  Matrix out(n, n);
  // 0-based form of: entry (p,q) = a_{1+(p-1) mod k, 1+(q-1) mod k} when
  // floor((p-1)/k) == floor((q-1)/k), else 0.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p / k == q / k) out(p, q) = a(p % k, q % k);
    }
  }
  return out;
}

Complex normalized_trace(const Matrix& a) {
  return trace(a) / static_cast<double>(a.rows());
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError("hs_inner: operands must be square of equal size");
  }
  // tr(b* a) = sum_{i,j} conj(b_ij) a_ij.
  return kernels::dotc(b.data(), a.data()) / static_cast<double>(a.rows());
}

std::vector<Matrix> basis_B(const DivisorPair& pair) {
  const std::size_t k = pair.k();
  std::vector<Matrix> out;
  out.reserve(k * k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      Matrix unit(k, k);
      unit(p, q) = 1.0;
      out.push_back(embed(pair, unit));
    }
  }
  return out;
}

Matrix cond_expectation(const DivisorPair& pair, const Matrix& a) {
  require_size(pair, a, pair.n(), "cond_expectation");
  const std::size_t k = pair.k();
  const std::size_t n = pair.n();
  if (k == 1) return Matrix::identity(n) * normalized_trace(a);
  if (k == n) return a;

  const double weight = static_cast<double>(k) / static_cast<double>(n);
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i / k != j / k) continue;
      const std::size_t p = i % k;
      const std::size_t q = j % k;
      Complex sum{};
      for (std::size_t l = 0; l < pair.copies(); ++l) sum += a(p + k * l, q + k * l);
      out(i, j) = weight * sum;
    }
  }
  return out;
}

HermitianMatrix cond_expectation(const DivisorPair& pair, const HermitianMatrix& a) {
  // Entry (j,i) sums the conjugates of entry (i,j) in the same order, so the
  // output is exactly Hermitian; the trace of a Hermitian input is real.
  return HermitianMatrix(cond_expectation(pair, a.matrix()));
}

Matrix cond_expectation_blockmean(const DivisorPair& pair, const Matrix& a) {
  const auto decomposition = diagonal_blocks(pair, a);
  Matrix mean(pair.k(), pair.k());
  for (const auto& block : decomposition.blocks) mean += block;
  mean *= static_cast<double>(pair.k()) / static_cast<double>(pair.n());
  return embed(pair, mean);
}

Matrix cond_expectation_basis(const DivisorPair& pair, const Matrix& a) {
  require_size(pair, a, pair.n(), "cond_expectation_basis");
  Matrix out(pair.n(), pair.n());
  for (const auto& b : basis_B(pair)) {
    const Complex coeff = hs_inner(a, b) / hs_inner(b, b);
    out += b * coeff;
  }
  return out;
}

}  // namespace qmetric
