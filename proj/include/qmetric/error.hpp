#pragma once

#include <stdexcept>
#include <string>

namespace qmetric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (non-square input, size mismatch with a pair or spec).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a type invariant: non-finite entry, non-Hermitian input,
/// invalid divisor pair, non-unitary matrix, invalid density state.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Iterative routine exhausted its budget without meeting its stopping rule.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmetric
