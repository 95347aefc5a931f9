#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qmetric/algebra_maps.hpp"
#include "qmetric/matrix.hpp"

namespace qmetric {

enum class LipVariant {
  trace,    ///< ||a - P_{1,n}(a)||
  divisor,  ///< max(||a - P_{1,n}(a)||, k ||a - P_{k,n}(a)||)
};

/// Which Lip-norm on sa(M_n(C)), with its quasi-Leibniz constants (C, D) = (2, 0).
class LipSpec {
 public:
  static LipSpec trace(std::size_t n);
  /// Requires k | n and 1 < k < n.
  static LipSpec divisor(std::size_t n, std::size_t k);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  /// Block size; 1 for the trace variant.
  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] LipVariant variant() const noexcept { return variant_; }
  [[nodiscard]] double leibniz_C() const noexcept { return 2.0; }
  [[nodiscard]] double leibniz_D() const noexcept { return 0.0; }
  /// "trace@4" or "divisor(2)@4".
  [[nodiscard]] std::string label() const;

  friend bool operator==(const LipSpec&, const LipSpec&) = default;

 private:
  LipSpec(std::size_t n, std::size_t k, LipVariant variant) : n_(n), k_(k), variant_(variant) {}

  std::size_t n_;
  std::size_t k_;
  LipVariant variant_;
};

double lip_eval(const LipSpec& spec, const HermitianMatrix& a);

/// diag(k, 0, ..., 0) in M_n(C); requires k | n and 1 < k < n.
HermitianMatrix witness(std::size_t n, std::size_t k);

struct WitnessReport {
  std::size_t n = 0;
  std::size_t k = 0;
  double lip1_value = 0.0;
  double lipk_value = 0.0;
  double gap = 0.0;
  double closed_form_lip1 = 0.0;  ///< k(n-1)/n
  double closed_form_lipk = 0.0;  ///< k^2(n-k)/n
  // Exact closed forms over the common denominator n.
  std::int64_t lip1_numerator = 0;  ///< k(n-1)
  std::int64_t lipk_numerator = 0;  ///< k^2(n-k)
  std::int64_t gap_numerator = 0;   ///< k(k(n-k) - (n-1))
  std::int64_t denominator = 0;     ///< n
  bool lip1_matches = false;        ///< |lip1_value - closed_form_lip1| <= 1e-12
  bool lipk_matches = false;
  bool gap_positive = false;        ///< exact integer check of gap_numerator > 0
  std::string statement;

  [[nodiscard]] bool certified() const noexcept { return lip1_matches && lipk_matches && gap_positive; }
};

inline constexpr double kClosedFormTolerance = 1e-12;

/// Evaluates both Lip-norms on witness(n, k) and checks them against the
/// closed forms. Since the trace Lip-norm is invariant under every unitary
/// conjugation, a positive gap rules out any *-automorphism intertwining the two.
WitnessReport certify_non_isometry(std::size_t n, std::size_t k);

/// |L_1(U a U*) - L_1(a)|; throws ValidationError for non-unitary U.
double check_unitary_invariance(std::size_t n, const Matrix& u, const HermitianMatrix& a);

struct QuasiLeibnizResult {
  double lhs = 0.0;     ///< max(L(a o b), L({a, b}))
  double rhs = 0.0;     ///< C(||a|| L(b) + ||b|| L(a)) + D L(a) L(b)
  double margin = 0.0;  ///< rhs - lhs
  double scale = 0.0;   ///< (1 + ||a||)(1 + ||b||)

  [[nodiscard]] bool holds(double rel_tol = 1e-9) const noexcept { return margin >= -rel_tol * scale; }
};

QuasiLeibnizResult check_quasi_leibniz(const LipSpec& spec, const HermitianMatrix& a,
                                       const HermitianMatrix& b);

inline constexpr double kKernelSeminormThreshold = 1e-10;
inline constexpr double kKernelScalarThreshold = 1e-9;

/// True iff (L(a) <= 1e-10) agrees with (||a - tr_n(a) I|| <= 1e-9).
bool check_kernel(const LipSpec& spec, const HermitianMatrix& a);

}  // namespace qmetric
