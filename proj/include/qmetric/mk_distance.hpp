#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qmetric/lip_norms.hpp"
#include "qmetric/matrix.hpp"

namespace qmetric {

/// State phi(a) = Tr(rho a): rho Hermitian, eigenvalues >= -1e-10, Tr(rho) = 1 within 1e-10.
class DensityState {
 public:
  explicit DensityState(HermitianMatrix rho);

  /// Pure basis state e_i e_i* (i is 1-based).
  static DensityState basis_state(std::size_t n, std::size_t i);
  static DensityState maximally_mixed(std::size_t n);
  /// diag(p); p must be a probability vector.
  static DensityState diagonal(std::span<const double> probabilities);

  [[nodiscard]] const HermitianMatrix& rho() const noexcept { return rho_; }
  [[nodiscard]] std::size_t dim() const noexcept { return rho_.dim(); }

 private:
  HermitianMatrix rho_;
};

inline constexpr double kDensityEigenTolerance = 1e-10;
inline constexpr double kDensityTraceTolerance = 1e-10;

/// Tr(rho a), real for Hermitian a.
double pairing(const DensityState& rho, const HermitianMatrix& a);

struct MkOptions {
  std::size_t max_iters = 2000;
  /// Initial ADMM penalty; rebalanced against the residual ratio every 10 iterations.
  double penalty = 1.0;
  /// Oracle agreement required for converged = true on oracle-covered inputs.
  double tol = 1e-3;
  /// Primal/dual residual level (Frobenius) treated as a fixed point.
  double residual_tol = 1e-9;
};

struct MkResult {
  double value = 0.0;  ///< certified lower bound: |pairing(rho, c) - pairing(sigma, c)|
  HermitianMatrix certificate;  ///< feasible: lip_eval(spec, c) <= 1 + 1e-9
  std::size_t iterations = 0;
  bool converged = false;
  std::optional<double> oracle_value;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
};

/// sup { |phi(a) - psi(a)| : a Hermitian, L(a) <= 1 }, approached by ADMM on
/// the split a - P_{1,n}(a) in the unit operator-norm ball and, for the divisor
/// variant, a - P_{k,n}(a) in the ball of radius 1/k. Returns the best feasible
/// value seen. When the oracle applies (rho - sigma diagonal, or the trace
/// variant, which is unitarily invariant) converged means oracle agreement
/// within opts.tol; otherwise it means the residuals reached opts.residual_tol.
/// Never throws for non-convergence.
MkResult mk_distance(const LipSpec& spec, const DensityState& rho, const DensityState& sigma,
                     MkOptions opts = {});

/// Exact LP over diagonal a: maximize sum delta_i a_i subject to
/// |a_i - mean(a)| <= 1 and, for the divisor variant, k |a_i - blockmean_i(a)| <= 1
/// where blockmean_i averages the positions congruent to i mod k.
/// Requires |sum delta| <= 1e-12 max(1, sum |delta_i|).
double mk_diagonal_oracle(const LipSpec& spec, std::span<const double> delta);

/// Diagonal of P_{k,n}(diag(a)): the mean over positions congruent mod k.
std::vector<double> diagonal_block_mean(std::size_t k, std::span<const double> a);

/// Projection (Frobenius) of a Hermitian matrix onto the operator-norm ball of
/// the given radius: eigenvalues clipped to [-radius, radius].
HermitianMatrix clip_to_ball(const HermitianMatrix& x, double radius);

}  // namespace qmetric
