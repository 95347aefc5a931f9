#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qmetric/matrix.hpp"

namespace qmetric {

/// Eigendecomposition h = V diag(eigenvalues) V*, eigenvalues ascending,
/// eigenvectors stored as the columns of V.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

struct EighOptions {
  /// Stop once the off-diagonal Frobenius mass is at most this fraction of ||h||_F.
  double offdiag_tolerance = 1e-13;
  /// Sweep budget is sweeps_per_dim * n full cyclic sweeps.
  std::size_t sweeps_per_dim = 40;
};

/// Cyclic complex Jacobi. Throws ConvergenceError if the sweep budget runs out.
Spectrum eigh(const HermitianMatrix& h, EighOptions options = {});

/// Eigenvalues only (same solver).
std::vector<double> eigvalsh(const HermitianMatrix& h);

/// Spectral norm. Hermitian input: max |eigenvalue|; diagonal input: max |entry|.
double operator_norm(const HermitianMatrix& a);
/// Spectral norm of a general square matrix: sqrt(lambda_max(a* a)).
double operator_norm(const Matrix& a);

/// Jordan product (ab + ba) / 2.
HermitianMatrix jordan(const HermitianMatrix& a, const HermitianMatrix& b);
/// Lie product (ab - ba) / 2i.
HermitianMatrix lie(const HermitianMatrix& a, const HermitianMatrix& b);

/// Matrix unit E_{n,j,k}: a single 1 at row j, column k (1-based).
Matrix matrix_unit(std::size_t n, std::size_t j, std::size_t k);

/// max |U*U - I|.
double unitarity_defect(const Matrix& u);
bool is_unitary(const Matrix& u, double tolerance = kUnitaryTolerance);

/// U a U*. Throws ValidationError when U is not unitary within 1e-10.
Matrix conjugate_by_unitary(const Matrix& u, const Matrix& a);
HermitianMatrix conjugate_by_unitary(const Matrix& u, const HermitianMatrix& a);

/// Deterministic sub-seed for (base seed, trial index, stream); trial streams
/// are rooted at base ^ trial so that serial and parallel sweeps agree.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial, std::uint64_t stream = 0);

/// Matrix of i.i.d. standard complex Gaussians (real and imaginary parts N(0, 1/2)).
Matrix random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed);
/// (G + G*) / 2 for a complex Gaussian G.
HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed);
/// Haar unitary: Gram-Schmidt on a complex Gaussian, R with positive real diagonal.
Matrix random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace qmetric
