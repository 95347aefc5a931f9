#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library code it checks (explicit loops, power iteration,
// enumeration, grid search) and avoids the dispatched kernels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "qmetric/matrix.hpp"

namespace qmetric::testing {

inline Matrix naive_multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s{};
      for (std::size_t p = 0; p < a.cols(); ++p) s += a(i, p) * b(p, j);
      c(i, j) = s;
    }
  }
  return c;
}

inline Matrix naive_adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

/// Largest eigenvalue of the PSD matrix a*a by power iteration; returns its sqrt.
inline double power_iteration_norm(const Matrix& a, int iterations = 5000) {
  const Matrix g = naive_multiply(naive_adjoint(a), a);
  const std::size_t n = g.cols();
  std::vector<Complex> v(n);
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> nd;
  for (auto& e : v) e = {nd(rng), nd(rng)};
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<Complex> w(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += g(i, j) * v[j];
    double norm = 0.0;
    for (const auto& e : w) norm += std::norm(e);
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (auto& e : w) e /= norm;
    const double prev = lambda;
    lambda = norm;
    v = std::move(w);
    if (it > 50 && std::abs(lambda - prev) <= 1e-15 * lambda) break;
  }
  return std::sqrt(lambda);
}

/// pi_{k,n}(a) assembled block by block (no coordinate formula).
inline Matrix block_assembly_embed(std::size_t k, std::size_t n, const Matrix& a) {
  Matrix out(n, n);
  for (std::size_t block = 0; block < n / k; ++block) {
    const std::size_t offset = block * k;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out(offset + i, offset + j) = a(i, j);
  }
  return out;
}

/// Max of sum delta_i a_i over the diagonal Lip-ball by enumerating every
/// vertex of the (mean-zero) polytope: choose n-1 active constraints among
/// {g.a = +-h}, solve, keep feasible points. Exponential; small n only.
inline double vertex_enumeration_oracle(const std::vector<double>& delta, std::size_t k_block,
                                        bool divisor) {
  const std::size_t n = delta.size();
  // Constraint forms g.a <= h over the full vector a, plus the equality sum a = 0.
  std::vector<std::vector<double>> g;
  std::vector<double> h;
  auto add = [&](std::vector<double> row, double bound) {
    std::vector<double> neg(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
    g.push_back(std::move(row));
    h.push_back(bound);
    g.push_back(std::move(neg));
    h.push_back(bound);
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = -1.0 / static_cast<double>(n);
    row[i] += 1.0;
    add(row, 1.0);
  }
  if (divisor) {
    const std::size_t copies = n / k_block;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> row(n, 0.0);
      for (std::size_t j = i % k_block; j < n; j += k_block) row[j] -= 1.0 / static_cast<double>(copies);
      row[i] += 1.0;
      add(row, 1.0 / static_cast<double>(k_block));
    }
  }
  const std::size_t m = g.size();
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(n - 1);
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t depth, std::size_t start) {
    if (depth == n - 1) {
      // Solve [g_pick; 1^T] a = [h_pick; 0] by Gaussian elimination with partial pivoting.
      std::vector<std::vector<double>> M(n, std::vector<double>(n + 1));
      for (std::size_t r = 0; r < n - 1; ++r) {
        for (std::size_t c = 0; c < n; ++c) M[r][c] = g[pick[r]][c];
        M[r][n] = h[pick[r]];
      }
      for (std::size_t c = 0; c < n; ++c) M[n - 1][c] = 1.0;
      M[n - 1][n] = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
          if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
        if (std::abs(M[piv][c]) < 1e-12) return;  // singular choice
        std::swap(M[piv], M[c]);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == c) continue;
          const double f = M[r][c] / M[c][c];
          for (std::size_t cc = c; cc <= n; ++cc) M[r][cc] -= f * M[c][cc];
        }
      }
      std::vector<double> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = M[i][n] / M[i][i];
      for (std::size_t r = 0; r < m; ++r) {
        double lhs = 0.0;
        for (std::size_t c = 0; c < n; ++c) lhs += g[r][c] * a[c];
        if (lhs > h[r] + 1e-9) return;
      }
      double obj = 0.0;
      for (std::size_t i = 0; i < n; ++i) obj += delta[i] * a[i];
      best = std::max(best, obj);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick[depth] = i;
      recurse(depth + 1, i + 1);
    }
  };
  recurse(0, 0);
  return best;
}

}  // namespace qmetric::testing
