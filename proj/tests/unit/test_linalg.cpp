#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "qmetric/error.hpp"
#include "qmetric/linalg.hpp"
#include "support/oracles.hpp"

using namespace qmetric;
using qmetric::testing::naive_multiply;
using qmetric::testing::power_iteration_norm;

namespace {

const Complex I{0.0, 1.0};

Matrix random_square(std::size_t n, std::uint64_t seed) { return random_gaussian(n, n, seed); }

Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

TEST(Matrix, RejectsNonFiniteAndLengthMismatch) {
  EXPECT_THROW(Matrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
  EXPECT_THROW(Matrix(1, 1, {Complex(NAN, 0.0)}), ValidationError);
  EXPECT_THROW(Matrix(1, 1, {Complex(0.0, INFINITY)}), ValidationError);
  EXPECT_THROW(Matrix(0, 3), DimensionError);
}

TEST(Adjoint, Examples) {
  const Matrix a{{0.0, I}, {0.0, 0.0}};
  const Matrix expected{{0.0, 0.0}, {-I, 0.0}};
  EXPECT_EQ(adjoint(a), expected);
  EXPECT_EQ(adjoint(adjoint(a)), a);
  EXPECT_EQ(adjoint(Matrix::identity(4)), Matrix::identity(4));
}

TEST(Adjoint, AntiMultiplicative) {
  const auto a = random_square(3, 1), b = random_square(3, 2);
  EXPECT_LE(max_abs_diff(adjoint(naive_multiply(a, b)), naive_multiply(adjoint(b), adjoint(a))), 1e-14);
  EXPECT_LE(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)), 1e-14);
}

TEST(Hermitian, AdmissionToleranceAndSymmetrization) {
  Matrix a{{1.0, Complex(2.0, 1.0)}, {Complex(2.0, -1.0 + 5e-13), 3.0}};
  const HermitianMatrix h(a);
  EXPECT_EQ(hermiticity_defect(h.matrix()), 0.0);
  Matrix bad{{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(HermitianMatrix{bad}, ValidationError);
}

TEST(OperatorNorm, Examples) {
  EXPECT_DOUBLE_EQ(operator_norm(Matrix::diagonal({3.0, -1.0})), 3.0);
  EXPECT_NEAR(operator_norm(HermitianMatrix(Matrix{{0.0, 1.0}, {1.0, 0.0}})), 1.0, 1e-15);
  // a*a = [[1,1],[1,2]] has lambda_max = (3 + sqrt 5)/2, so ||a|| is the golden ratio.
  EXPECT_NEAR(operator_norm(Matrix{{1.0, 1.0}, {0.0, 1.0}}), std::numbers::phi, 1e-12);
  EXPECT_THROW(operator_norm(Matrix(2, 3)), DimensionError);
}

TEST(OperatorNorm, AgreesWithPowerIteration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_square(8, 100 + seed);
    EXPECT_NEAR(operator_norm(a), power_iteration_norm(a), 1e-7) << "seed " << seed;
  }
}

TEST(OperatorNorm, CStarIdentityAndSubmultiplicativity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_square(5, 200 + seed);
    const auto b = random_square(5, 300 + seed);
    const double na = operator_norm(a);
    EXPECT_LE(std::abs(operator_norm(adjoint(a) * a) - na * na), 1e-8 * (1.0 + na * na));
    EXPECT_LE(operator_norm(a * b), na * operator_norm(b) + 1e-9);
  }
}

TEST(OperatorNorm, UnitaryInvariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = random_square(6, 400 + seed);
    const auto u = random_unitary(6, 500 + seed);
    EXPECT_NEAR(operator_norm(conjugate_by_unitary(u, a)), operator_norm(a), 1e-9);
  }
}

TEST(Eigh, Examples) {
  auto s = eigh(HermitianMatrix(Matrix::diagonal({2.0, 5.0})));
  EXPECT_EQ(s.eigenvalues, (std::vector<double>{2.0, 5.0}));
  EXPECT_EQ(s.eigenvectors, Matrix::identity(2));

  s = eigh(HermitianMatrix(Matrix{{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-15);

  s = eigh(HermitianMatrix(Matrix::diagonal({5.0, 2.0})));
  EXPECT_EQ(s.eigenvalues, (std::vector<double>{2.0, 5.0}));
  EXPECT_EQ(s.eigenvectors, (Matrix{{0.0, 1.0}, {1.0, 0.0}}));
}

TEST(Eigh, ReconstructionAndUnitarity) {
  for (std::size_t n : {1u, 2u, 6u, 17u, 40u}) {
    const auto h = random_hermitian(n, 600 + n);
    const auto s = eigh(h);
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    Matrix vd = s.eigenvectors;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) vd(i, j) *= s.eigenvalues[j];
    const Matrix residual = h.matrix() - vd * adjoint(s.eigenvectors);
    EXPECT_LE(operator_norm(residual), 1e-10 * std::max(1.0, operator_norm(h))) << "n=" << n;
    EXPECT_LE(unitarity_defect(s.eigenvectors), 1e-10);
  }
}

TEST(Eigh, MatchesEigenSelfAdjointSolver) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = random_hermitian(9, 700 + seed);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h.matrix()));
    const auto ev = eigvalsh(h);
    for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_NEAR(ev[i], es.eigenvalues()(i), 1e-11);
  }
}

TEST(Eigh, ExhaustedBudgetIsReported) {
  const auto h = random_hermitian(6, 1);
  EXPECT_THROW(eigh(h, EighOptions{.offdiag_tolerance = 0.0, .sweeps_per_dim = 1}), ConvergenceError);
}

TEST(Eigh, Deterministic) {
  const auto h = random_hermitian(7, 3);
  const auto a = eigh(h), b = eigh(h);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

TEST(Products, JordanAndLie) {
  const HermitianMatrix e11(matrix_unit(2, 1, 1));
  EXPECT_EQ(jordan(e11, e11).matrix(), e11.matrix());
  const auto a = random_hermitian(4, 9);
  EXPECT_EQ(max_abs(lie(a, a).matrix()), 0.0);
  EXPECT_LE(max_abs_diff(jordan(a, a).matrix(), a.matrix() * a.matrix()), 1e-14);
  const HermitianMatrix x(Matrix{{0.0, 1.0}, {1.0, 0.0}});
  const HermitianMatrix z(Matrix::diagonal({1.0, -1.0}));
  EXPECT_EQ(max_abs(jordan(x, z).matrix()), 0.0);
  // {x, z} = (xz - zx)/2i = [[0, i], [-i, 0]] by direct 2x2 multiplication.
  EXPECT_LE(max_abs_diff(lie(x, z).matrix(), Matrix{{0.0, I}, {-I, 0.0}}), 1e-15);
  EXPECT_THROW(jordan(a, x), DimensionError);
}

TEST(MatrixUnit, Examples) {
  EXPECT_EQ(matrix_unit(2, 1, 2), (Matrix{{0.0, 1.0}, {0.0, 0.0}}));
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q)
      EXPECT_EQ(matrix_unit(3, q, p) * matrix_unit(3, p, q), matrix_unit(3, q, q));
  Matrix sum(5, 5);
  for (std::size_t j = 1; j <= 5; ++j) sum += matrix_unit(5, j, j);
  EXPECT_EQ(sum, Matrix::identity(5));
  EXPECT_THROW(matrix_unit(3, 0, 1), ValidationError);
  EXPECT_THROW(matrix_unit(3, 1, 4), ValidationError);
}

TEST(ConjugateByUnitary, Examples) {
  const auto a = random_square(4, 11);
  EXPECT_EQ(conjugate_by_unitary(Matrix::identity(4), a), a);
  const Matrix swap{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_EQ(conjugate_by_unitary(swap, Matrix::diagonal({1.0, 2.0})), Matrix::diagonal({2.0, 1.0}));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto u = random_unitary(4, 20 + seed);
    const auto b = random_square(4, 40 + seed);
    EXPECT_LE(std::abs(trace(conjugate_by_unitary(u, b)) - trace(b)), 1e-12);
    const auto h = random_hermitian(4, 60 + seed);
    EXPECT_NO_THROW(conjugate_by_unitary(u, h));
  }
  EXPECT_THROW(conjugate_by_unitary(Matrix::diagonal({1.0, 2.0}), a), DimensionError);
  EXPECT_THROW(conjugate_by_unitary(Matrix::diagonal({1.0, 2.0}), Matrix(2, 2)), ValidationError);
}

TEST(Random, UnitaryProperties) {
  const auto u1 = random_unitary(1, 5);
  EXPECT_NEAR(std::abs(u1(0, 0)), 1.0, 1e-15);
  EXPECT_EQ(random_unitary(5, 77), random_unitary(5, 77));
  EXPECT_EQ(random_hermitian(5, 77), random_hermitian(5, 77));
  EXPECT_NE(random_unitary(5, 77), random_unitary(5, 78));
  const auto u = random_unitary(5, 123);
  for (std::size_t j = 0; j < 5; ++j) {
    double norm = 0.0;
    for (std::size_t i = 0; i < 5; ++i) norm += std::norm(u(i, j));
    EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-10);
  }
  EXPECT_LE(unitarity_defect(random_unitary(32, 9)), 1e-10);
}

// Haar check: for Haar U, E|U_11|^2 = 1/n and E|U_11|^4 = 2/(n(n+1)).
TEST(Random, UnitaryFirstMomentsMatchHaar) {
  const std::size_t n = 3;
  const int samples = 4000;
  double m2 = 0.0, m4 = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double p = std::norm(random_unitary(n, derive_seed(99, s))(0, 0));
    m2 += p;
    m4 += p * p;
  }
  EXPECT_NEAR(m2 / samples, 1.0 / 3.0, 0.02);
  EXPECT_NEAR(m4 / samples, 2.0 / 12.0, 0.02);
}

TEST(Trace, Cyclicity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_square(6, 800 + seed), b = random_square(6, 900 + seed);
    EXPECT_LE(std::abs(trace(a * b) - trace(b * a)), 1e-12);
  }
}
