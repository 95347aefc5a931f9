#include "qmetric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmetric/error.hpp"

namespace qmetric {

namespace {

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

double max_abs_diagonal(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, std::abs(a(i, i)));
  return m;
}

// Loose bound on the entrywise rounding of ab +- ba, used as the Hermiticity
// admission tolerance for Jordan and Lie products.
double product_rounding_bound(const HermitianMatrix& a, const HermitianMatrix& b) {
  return 1e-12 * (1.0 + static_cast<double>(a.dim()) * max_abs(a.matrix()) * max_abs(b.matrix()));
}

}  // namespace

double operator_norm(const HermitianMatrix& a) {
  if (a.matrix().is_diagonal()) return max_abs_diagonal(a.matrix());
  const auto ev = eigvalsh(a);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

double operator_norm(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("operator_norm: matrix must be square");
  if (a.is_diagonal()) return max_abs_diagonal(a);
  if (hermiticity_defect(a) == 0.0) return operator_norm(HermitianMatrix(a));
  Matrix gram = adjoint(a) * a;
  const double tol = 1e-10 * (1.0 + max_abs(gram));
  const auto ev = eigvalsh(HermitianMatrix(std::move(gram), tol));
  return std::sqrt(std::max(ev.back(), 0.0));
}

HermitianMatrix jordan(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b, "jordan");
  Matrix out = (a.matrix() * b.matrix() + b.matrix() * a.matrix()) * 0.5;
  const double tol = product_rounding_bound(a, b);
  return HermitianMatrix(std::move(out), tol);
}

HermitianMatrix lie(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b, "lie");
  Matrix out = (a.matrix() * b.matrix() - b.matrix() * a.matrix()) * Complex(0.0, -0.5);  // 1/(2i)
  const double tol = product_rounding_bound(a, b);
  return HermitianMatrix(std::move(out), tol);
}

Matrix matrix_unit(std::size_t n, std::size_t j, std::size_t k) {
  if (n == 0) throw DimensionError("matrix_unit: n must be positive");
  if (j < 1 || j > n || k < 1 || k > n) {
    throw ValidationError("matrix_unit: indices (" + std::to_string(j) + ", " + std::to_string(k) +
                          ") out of range 1.." + std::to_string(n));
  }
  Matrix e(n, n);
  e(j - 1, k - 1) = 1.0;
  return e;
}

double unitarity_defect(const Matrix& u) {
  if (!u.is_square()) return INFINITY;
  return max_abs_diff(adjoint(u) * u, Matrix::identity(u.rows()));
}

bool is_unitary(const Matrix& u, double tolerance) { return unitarity_defect(u) <= tolerance; }

Matrix conjugate_by_unitary(const Matrix& u, const Matrix& a) {
  if (!u.is_square() || !a.is_square() || u.rows() != a.rows()) {
    throw DimensionError("conjugate_by_unitary: U and a must be square of equal size");
  }
  if (const double d = unitarity_defect(u); d > kUnitaryTolerance) {
    throw ValidationError("conjugate_by_unitary: U is not unitary (max |U*U - I| = " +
                          std::to_string(d) + ")");
  }
  return u * a * adjoint(u);
}

HermitianMatrix conjugate_by_unitary(const Matrix& u, const HermitianMatrix& a) {
  // U a U* is Hermitian up to rounding of the two products.
  return HermitianMatrix(conjugate_by_unitary(u, a.matrix()), 1e-9 * (1.0 + max_abs(a.matrix())));
}

}  // namespace qmetric
