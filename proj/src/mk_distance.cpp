#include "qmetric/mk_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmetric/algebra_maps.hpp"
#include "qmetric/error.hpp"
#include "qmetric/linalg.hpp"
#include "qmetric/simplex.hpp"

namespace qmetric {

namespace {

void require_dim(const LipSpec& spec, std::size_t dim, const char* op) {
  if (dim != spec.n()) {
    throw DimensionError(std::string(op) + ": " + spec.label() + " expects dimension " +
                         std::to_string(spec.n()) + ", got " + std::to_string(dim));
  }
}

// Products of Hermitian operands, Hermitian up to rounding.
HermitianMatrix rehermitize(Matrix m) {
  const double tol = 1e-9 * (1.0 + max_abs(m));
  return HermitianMatrix(std::move(m), tol);
}

Matrix remove_trace(Matrix x) {
  const Complex mean = normalized_trace(x);
  for (std::size_t i = 0; i < x.rows(); ++i) x(i, i) -= mean;
  return x;
}

// Helper for one ADMM constraint block: z = Q a in the operator-norm ball.
struct Split {
  double radius;
  Matrix z;
  Matrix u;
};

}  // namespace

// ---------------------------------------------------------------------------
// DensityState

DensityState::DensityState(HermitianMatrix rho) : rho_(std::move(rho)) {
  const double tr = trace(rho_.matrix()).real();
  if (std::abs(tr - 1.0) > kDensityTraceTolerance) {
    throw ValidationError("density state: trace must be 1 (got " + std::to_string(tr) + ")");
  }
  const auto ev = eigvalsh(rho_);
  if (ev.front() < -kDensityEigenTolerance) {
    throw ValidationError("density state: must be positive semidefinite (min eigenvalue " +
                          std::to_string(ev.front()) + ")");
  }
}

DensityState DensityState::basis_state(std::size_t n, std::size_t i) {
  return DensityState(HermitianMatrix(matrix_unit(n, i, i)));
}

DensityState DensityState::maximally_mixed(std::size_t n) {
  return DensityState(HermitianMatrix(Matrix::identity(n) * (1.0 / static_cast<double>(n))));
}

DensityState DensityState::diagonal(std::span<const double> probabilities) {
  return DensityState(HermitianMatrix(Matrix::diagonal(probabilities)));
}

double pairing(const DensityState& rho, const HermitianMatrix& a) {
  if (rho.dim() != a.dim()) throw DimensionError("pairing: dimension mismatch");
  // Tr(rho a) = sum_{ij} rho_ij a_ji = sum_{ij} conj(rho_ji) a_ji = <rho, a>_F.
  double s = 0.0;
  const auto r = rho.rho().matrix().data();
  const auto x = a.matrix().data();
  for (std::size_t i = 0; i < r.size(); ++i) s += (std::conj(r[i]) * x[i]).real();
  return s;
}

// ---------------------------------------------------------------------------
// Ball projection and diagonal restriction

HermitianMatrix clip_to_ball(const HermitianMatrix& x, double radius) {
  const std::size_t n = x.dim();
  if (operator_norm(x) <= radius) return x;
  auto spec = eigh(x);
  Matrix scaled = spec.eigenvectors;
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = std::clamp(spec.eigenvalues[j], -radius, radius);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= lambda;
  }
  return rehermitize(scaled * adjoint(spec.eigenvectors));
}

std::vector<double> diagonal_block_mean(std::size_t k, std::span<const double> a) {
  const std::size_t n = a.size();
  if (k == 0 || n % k != 0) throw ValidationError("diagonal_block_mean: k must divide n");
  std::vector<double> mean(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) mean[i % k] += a[i];
  const double weight = static_cast<double>(k) / static_cast<double>(n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = weight * mean[i % k];
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

double mk_diagonal_oracle(const LipSpec& spec, std::span<const double> delta) {
  const std::size_t n = spec.n();
  require_dim(spec, delta.size(), "mk_diagonal_oracle");
  const double sum = std::accumulate(delta.begin(), delta.end(), 0.0);
  double l1 = 0.0;
  for (double d : delta) l1 += std::abs(d);
  if (std::abs(sum) > 1e-12 * std::max(1.0, l1)) {
    throw ValidationError("mk_diagonal_oracle: delta must sum to zero (sum = " +
                          std::to_string(sum) + ")");
  }

  // Shift invariance lets us fix mean(a) = 0 and eliminate a_n = -sum_{i<n} a_i.
  // Each free a_i (i < n) is split as x_i^+ - x_i^-; every constraint is then
  // g.a <= h with h > 0, so the origin is a feasible starting vertex.
  const std::size_t free_vars = n - 1;
  auto to_columns = [&](const std::vector<double>& g) {
    std::vector<double> row(2 * free_vars);
    for (std::size_t i = 0; i < free_vars; ++i) {
      const double coeff = g[i] - g[n - 1];
      row[i] = coeff;
      row[free_vars + i] = -coeff;
    }
    return row;
  };

  LinearProgram lp;
  auto add_abs_constraint = [&](const std::vector<double>& g, double bound) {
    lp.A.push_back(to_columns(g));
    lp.b.push_back(bound);
    std::vector<double> neg(g.size());
    std::transform(g.begin(), g.end(), neg.begin(), [](double v) { return -v; });
    lp.A.push_back(to_columns(neg));
    lp.b.push_back(bound);
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> g(n, 0.0);
    g[i] = 1.0;  // a_i - mean(a), mean fixed at zero
    add_abs_constraint(g, 1.0);
  }
  if (spec.variant() == LipVariant::divisor) {
    const std::size_t k = spec.k();
    const double weight = static_cast<double>(k) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> g(n, 0.0);
      for (std::size_t j = i % k; j < n; j += k) g[j] -= weight;
      g[i] += 1.0;  // a_i - blockmean_i(a)
      add_abs_constraint(g, 1.0 / static_cast<double>(k));
    }
  }
  lp.c = to_columns(std::vector<double>(delta.begin(), delta.end()));
  return solve_lp(lp).value;
}

// ---------------------------------------------------------------------------
// Solver

MkResult mk_distance(const LipSpec& spec, const DensityState& rho, const DensityState& sigma,
                     MkOptions opts) {
  require_dim(spec, rho.dim(), "mk_distance");
  require_dim(spec, sigma.dim(), "mk_distance");
  const std::size_t n = spec.n();
  const bool divisor = spec.variant() == LipVariant::divisor;
  const DivisorPair pair(spec.k(), n);

  const Matrix delta = remove_trace(rho.rho().matrix() - sigma.rho().matrix());

  MkResult result{.certificate = HermitianMatrix(Matrix(n, n)), .oracle_value = std::nullopt};

  // Oracle: diagonal delta for either variant; any delta for the trace
  // variant, whose Lip-norm is unitarily invariant.
  if (delta.is_diagonal()) {
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = delta(i, i).real();
    const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(n);
    for (auto& v : d) v -= mean;
    result.oracle_value = mk_diagonal_oracle(spec, d);
  } else if (!divisor) {
    auto ev = eigvalsh(rehermitize(delta));
    const double mean = std::accumulate(ev.begin(), ev.end(), 0.0) / static_cast<double>(n);
    for (auto& v : ev) v -= mean;
    result.oracle_value = mk_diagonal_oracle(spec, ev);
  }

  auto evaluate = [&](const Matrix& candidate) {
    HermitianMatrix a = rehermitize(candidate);
    const double lip = lip_eval(spec, a);
    Matrix scaled = a.matrix() * (1.0 / std::max(1.0, lip));
    HermitianMatrix cert = rehermitize(std::move(scaled));
    double gain = pairing(rho, cert) - pairing(sigma, cert);
    if (gain < 0.0) {
      cert = HermitianMatrix(-cert.matrix());
      gain = -gain;
    }
    if (gain > result.value) {
      result.value = gain;
      result.certificate = std::move(cert);
    }
  };

  if (frobenius_norm(delta) == 0.0) {
    result.converged = true;
    return result;
  }

  // min -<delta, a>  s.t.  Q_1 a = z_1 in B(1),  Q_k a = z_k in B(1/k),
  // where Q_1 = I - P_{1,n} and Q_k = I - P_{k,n}. On traceless matrices
  // Q_1 + Q_k acts as 1 on image(P_{k,n}) and as 2 on ker(P_{k,n}), so the
  // a-update has a closed form.
  std::vector<Split> splits;
  splits.push_back({1.0, Matrix(n, n), Matrix(n, n)});
  if (divisor) splits.push_back({1.0 / static_cast<double>(spec.k()), Matrix(n, n), Matrix(n, n)});
  auto apply_q = [&](std::size_t which, const Matrix& x) {
    return which == 0 ? remove_trace(x) : x - cond_expectation(pair, x);
  };

  double penalty = opts.penalty;
  Matrix a(n, n);
  std::size_t iter = 0;
  for (; iter < opts.max_iters; ++iter) {
    Matrix rhs = delta * (1.0 / penalty);
    for (std::size_t s = 0; s < splits.size(); ++s) rhs += apply_q(s, splits[s].z - splits[s].u);
    if (divisor) {
      const Matrix block_part = cond_expectation(pair, rhs);
      a = remove_trace(block_part) + (rhs - block_part) * 0.5;
    } else {
      a = remove_trace(rhs);
    }

    double primal_sq = 0.0;
    double dual_sq = 0.0;
    for (std::size_t s = 0; s < splits.size(); ++s) {
      Split& sp = splits[s];
      const Matrix qa = apply_q(s, a);
      Matrix z_new = clip_to_ball(rehermitize(qa + sp.u), sp.radius).matrix();
      const double pr = frobenius_norm(qa - z_new);
      const double dr = penalty * frobenius_norm(apply_q(s, z_new - sp.z));
      primal_sq += pr * pr;
      dual_sq += dr * dr;
      sp.u += qa - z_new;
      sp.z = std::move(z_new);
    }
    result.primal_residual = std::sqrt(primal_sq);
    result.dual_residual = std::sqrt(dual_sq);

    if (iter % 25 == 0) evaluate(a);
    if (result.primal_residual <= opts.residual_tol && result.dual_residual <= opts.residual_tol) {
      ++iter;
      break;
    }
    if (iter % 10 == 9) {
      double factor = 1.0;
      if (result.primal_residual > 10.0 * result.dual_residual) factor = 2.0;
      if (result.dual_residual > 10.0 * result.primal_residual) factor = 0.5;
      if (factor != 1.0) {
        penalty *= factor;
        for (auto& sp : splits) sp.u *= 1.0 / factor;  // scaled duals follow the penalty
      }
    }
  }
  evaluate(a);
  // The feasible set contains the z-iterates' preimages only approximately;
  // the z-blocks themselves give another candidate on the trace variant.
  if (!divisor) evaluate(splits[0].z);
  result.iterations = iter;

  if (result.oracle_value) {
    result.converged = std::abs(result.value - *result.oracle_value) <= opts.tol;
  } else {
    result.converged =
        result.primal_residual <= opts.residual_tol && result.dual_residual <= opts.residual_tol;
  }
  return result;
}

}  // namespace qmetric
