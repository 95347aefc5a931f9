#pragma once

#include <cstddef>
#include <vector>

#include "qmetric/matrix.hpp"

namespace qmetric {

/// (k, n) with k | n and 1 <= k <= n; parameterizes the block-diagonal
/// embedding M_k -> M_n and the conditional expectation onto its image.
class DivisorPair {
 public:
  DivisorPair(std::size_t k, std::size_t n);

  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  /// Number of diagonal copies, n / k.
  [[nodiscard]] std::size_t copies() const noexcept { return n_ / k_; }

  friend bool operator==(const DivisorPair&, const DivisorPair&) = default;

 private:
  std::size_t k_;
  std::size_t n_;
};

/// Every k with k | n, ascending (1 and n included).
std::vector<std::size_t> divisors(std::size_t n);
/// Every k with k | n and 1 < k < n.
std::vector<std::size_t> proper_divisors(std::size_t n);

/// The n/k diagonal k x k blocks B_1 ... B_{n/k} of an n x n matrix, top-left first.
struct BlockDecomposition {
  DivisorPair pair;
  std::vector<Matrix> blocks;
};

BlockDecomposition diagonal_blocks(const DivisorPair& pair, const Matrix& a);

/// Unital *-monomorphism pi_{k,n}: n/k copies of a on the block diagonal.
Matrix embed(const DivisorPair& pair, const Matrix& a);

/// tr_n(a) = Tr(a) / n.
Complex normalized_trace(const Matrix& a);

/// <a, b> = tr_n(b* a).
Complex hs_inner(const Matrix& a, const Matrix& b);

/// B_{k,n} = { embed(pair, E_{k,p,q}) : 1 <= p, q <= k }, ordered by (p, q).
std::vector<Matrix> basis_B(const DivisorPair& pair);

/// Trace-preserving conditional expectation P_{k,n}, entrywise formula:
///   P(a)_{i,j} = (k/n) sum_l a_{p+kl, q+kl}  on the diagonal blocks, 0 elsewhere,
/// with p, q the in-block positions of i, j. k = 1 uses tr_n(a) I_n directly.
Matrix cond_expectation(const DivisorPair& pair, const Matrix& a);
HermitianMatrix cond_expectation(const DivisorPair& pair, const HermitianMatrix& a);

/// Same map as embed(pair, (k/n) sum_i B_i); kept as a cross-check.
Matrix cond_expectation_blockmean(const DivisorPair& pair, const Matrix& a);

/// Same map as sum_{b in B_{k,n}} (<a,b> / <b,b>) b; kept as a cross-check.
Matrix cond_expectation_basis(const DivisorPair& pair, const Matrix& a);

}  // namespace qmetric
