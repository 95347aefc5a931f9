#include "qmetric/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmetric/error.hpp"
#include "qmetric/kernels.hpp"

namespace qmetric {

namespace {

void require_positive(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  require_positive(rows, cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive(rows, cols);
  if (entries_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(entries_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (!all_finite()) throw ValidationError("matrix entries must be finite");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  require_positive(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw ValidationError("matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  if (!m.all_finite()) throw ValidationError("matrix entries must be finite");
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

bool Matrix::is_diagonal() const noexcept {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != Complex{}) return false;
    }
  }
  return true;
}

bool Matrix::all_finite() const noexcept { return std::all_of(entries_.begin(), entries_.end(), finite); }

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex scalar) noexcept {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= -1.0; }
Matrix operator*(Matrix a, Complex s) { return a *= s; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("operator*: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
  }
  Matrix c(a.rows(), b.cols());
  kernels::gemm(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  return c;
}

Matrix adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Complex trace(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("trace: matrix must be square");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const auto& e : a.data()) m = std::max(m, std::abs(e));
  return m;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const auto& e : a.data()) s += std::norm(e);
  return std::sqrt(s);
}

bool approx_equal(const Matrix& a, const Matrix& b, Tolerance tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double scale = std::max(max_abs(a), max_abs(b));
  return max_abs_diff(a, b) <= tol.abs + tol.rel * scale;
}

double hermiticity_defect(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("hermiticity check requires a square matrix");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

HermitianMatrix::HermitianMatrix(Matrix a, double tolerance) : inner_(std::move(a)) {
  const double defect = hermiticity_defect(inner_);
  if (defect > tolerance) {
    throw ValidationError("matrix is not Hermitian (max |a - a*| = " + std::to_string(defect) + ")");
  }
  if (!inner_.all_finite()) throw ValidationError("matrix entries must be finite");
  const std::size_t n = inner_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    inner_(i, i) = inner_(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (inner_(i, j) + std::conj(inner_(j, i)));
      inner_(i, j) = avg;
      inner_(j, i) = std::conj(avg);
    }
  }
}

}  // namespace qmetric
