#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qmetric/tolerance.hpp"

namespace qmetric {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Storage is 0-based; the 1-based
/// convention of the algebraic interfaces (matrix_unit, embed coordinates)
/// is translated in one place by each of those functions.
class Matrix {
 public:
  /// Zero matrix. Both dimensions must be positive.
  Matrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; rejects length mismatch and non-finite values.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  static Matrix diagonal(std::initializer_list<double> values);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  [[nodiscard]] std::span<Complex> data() noexcept { return entries_; }
  [[nodiscard]] std::span<const Complex> data() const noexcept { return entries_; }
  [[nodiscard]] std::span<Complex> row(std::size_t i) noexcept {
    return std::span<Complex>(entries_).subspan(i * cols_, cols_);
  }
  [[nodiscard]] std::span<const Complex> row(std::size_t i) const noexcept {
    return std::span<const Complex>(entries_).subspan(i * cols_, cols_);
  }

  [[nodiscard]] bool is_diagonal() const noexcept;
  [[nodiscard]] bool all_finite() const noexcept;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scalar) noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, Complex s);
Matrix operator*(Complex s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix adjoint(const Matrix& a);

/// Sum of diagonal entries (unnormalized).
Complex trace(const Matrix& a);

double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);

/// Entrywise |a - b| <= tol.abs + tol.rel * max(|a|_max, |b|_max).
bool approx_equal(const Matrix& a, const Matrix& b, Tolerance tol = {});

/// Self-adjoint element of M_n(C). Inputs within the admission tolerance of
/// Hermitian are symmetrized to (a + a*)/2 on construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix a, double tolerance = kHermiticityTolerance);

  [[nodiscard]] const Matrix& matrix() const noexcept { return inner_; }
  [[nodiscard]] std::size_t dim() const noexcept { return inner_.rows(); }
  operator const Matrix&() const noexcept { return inner_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  Matrix inner_;
};

/// Max entry deviation |a - a*|.
double hermiticity_defect(const Matrix& a);

}  // namespace qmetric
