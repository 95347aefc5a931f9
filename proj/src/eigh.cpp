#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmetric/error.hpp"
#include "qmetric/kernels.hpp"
#include "qmetric/linalg.hpp"

namespace qmetric {

namespace {

double offdiag_mass(const Matrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary J = D R, where D = diag(1, e^{-i phi})
// on (p,q) makes the pair real and R is the classical real Jacobi rotation.
//   J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]   restricted to rows/cols (p,q).
// a <- J* a J, and the eigenvectors (kept transposed, one per row) get V <- V J.
void rotate(Matrix& a, Matrix& vt, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  // Rows: (J* a) restricted to rows p, q.
  kernels::rot(a.row(p), a.row(q), std::conj(jpp), std::conj(jqp), std::conj(jpq),
               std::conj(jqq));
  // Columns: (.) J on columns p, q.
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex x = a(i, p);
    const Complex y = a(i, q);
    a(i, p) = x * jpp + y * jqp;
    a(i, q) = x * jpq + y * jqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  kernels::rot(vt.row(p), vt.row(q), jpp, jqp, jpq, jqq);
}

}  // namespace

Spectrum eigh(const HermitianMatrix& h, EighOptions options) {
  const std::size_t n = h.dim();
  Matrix a = h.matrix();
  Matrix vt = Matrix::identity(n);

  const double scale = frobenius_norm(a);
  const double target = options.offdiag_tolerance * scale;
  const std::size_t budget = options.sweeps_per_dim * n;

  bool converged = scale == 0.0 || offdiag_mass(a) <= target;
  for (std::size_t sweep = 0; !converged && sweep < budget; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, vt, p, q);
    }
    converged = offdiag_mass(a) <= target;
  }
  if (!converged) {
    throw ConvergenceError("eigh: Jacobi did not converge within " + std::to_string(budget) +
                           " sweeps (n = " + std::to_string(n) + ")");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  Spectrum out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, col) = vt(src, i);
  }
  return out;
}

std::vector<double> eigvalsh(const HermitianMatrix& h) { return eigh(h).eigenvalues; }

}  // namespace qmetric
