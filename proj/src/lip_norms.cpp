#include "qmetric/lip_norms.hpp"

#include <algorithm>
#include <cmath>

#include "qmetric/error.hpp"
#include "qmetric/linalg.hpp"

namespace qmetric {

namespace {

constexpr std::size_t kMaxCertifiedDim = 1'000'000;  // keeps k^2 (n - k) inside int64

void require_proper_divisor(std::size_t n, std::size_t k) {
  if (k <= 1 || k >= n) {
    throw ValidationError("k must satisfy 1 < k < n (k=" + std::to_string(k) +
                          ", n=" + std::to_string(n) + ")");
  }
  if (n % k != 0) {
    throw ValidationError("k must divide n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
}

void require_dim(const LipSpec& spec, const HermitianMatrix& a, const char* op) {
  if (a.dim() != spec.n()) {
    throw DimensionError(std::string(op) + ": " + spec.label() + " expects " +
                         std::to_string(spec.n()) + "x" + std::to_string(spec.n()) +
                         " input, got " + std::to_string(a.dim()));
  }
}

// ||a - P_{1,n}(a)||. For Hermitian a the diagonal of a is real, so the
// difference is exactly Hermitian.
double deviation_from_trace(const HermitianMatrix& a) {
  const double mean = normalized_trace(a.matrix()).real();
  Matrix d = a.matrix();
  for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= mean;
  return operator_norm(HermitianMatrix(std::move(d)));
}

double deviation_from_blocks(const DivisorPair& pair, const HermitianMatrix& a) {
  return operator_norm(HermitianMatrix(a.matrix() - cond_expectation(pair, a.matrix())));
}

}  // namespace

LipSpec LipSpec::trace(std::size_t n) {
  if (n < 2) throw ValidationError("Lip-norm requires n >= 2 (n=" + std::to_string(n) + ")");
  return {n, 1, LipVariant::trace};
}

LipSpec LipSpec::divisor(std::size_t n, std::size_t k) {
  require_proper_divisor(n, k);
  return {n, k, LipVariant::divisor};
}

std::string LipSpec::label() const {
  if (variant_ == LipVariant::trace) return "trace@" + std::to_string(n_);
  return "divisor(" + std::to_string(k_) + ")@" + std::to_string(n_);
}

double lip_eval(const LipSpec& spec, const HermitianMatrix& a) {
  require_dim(spec, a, "lip_eval");
  const double trace_term = deviation_from_trace(a);
  if (spec.variant() == LipVariant::trace) return trace_term;
  const double block_term =
      static_cast<double>(spec.k()) * deviation_from_blocks(DivisorPair(spec.k(), spec.n()), a);
  return std::max(trace_term, block_term);
}

HermitianMatrix witness(std::size_t n, std::size_t k) {
  require_proper_divisor(n, k);
  Matrix w(n, n);
  w(0, 0) = static_cast<double>(k);
  return HermitianMatrix(std::move(w));
}

WitnessReport certify_non_isometry(std::size_t n, std::size_t k) {
  require_proper_divisor(n, k);
  if (n > kMaxCertifiedDim) throw ValidationError("certify: n too large for exact arithmetic");

  const auto w = witness(n, k);
  WitnessReport r;
  r.n = n;
  r.k = k;
  r.lip1_value = lip_eval(LipSpec::trace(n), w);
  r.lipk_value = lip_eval(LipSpec::divisor(n, k), w);
  r.gap = r.lipk_value - r.lip1_value;

  const auto ni = static_cast<std::int64_t>(n);
  const auto ki = static_cast<std::int64_t>(k);
  r.denominator = ni;
  r.lip1_numerator = ki * (ni - 1);
  r.lipk_numerator = ki * ki * (ni - ki);
  // k(n-k) >= n > n-1 for 1 < k < n with k | n, hence k^2(n-k) > k(n-1).
  r.gap_numerator = ki * (ki * (ni - ki) - (ni - 1));
  r.gap_positive = r.gap_numerator > 0;

  r.closed_form_lip1 = static_cast<double>(r.lip1_numerator) / static_cast<double>(ni);
  r.closed_form_lipk = static_cast<double>(r.lipk_numerator) / static_cast<double>(ni);
  r.lip1_matches = std::abs(r.lip1_value - r.closed_form_lip1) <= kClosedFormTolerance;
  r.lipk_matches = std::abs(r.lipk_value - r.closed_form_lipk) <= kClosedFormTolerance;

  r.statement = "L_1(w) = " + std::to_string(r.lip1_numerator) + "/" + std::to_string(ni) +
                " < L_" + std::to_string(k) + "(w) = " + std::to_string(r.lipk_numerator) + "/" +
                std::to_string(ni) +
                "; L_1 is invariant under every unitary conjugation a -> UaU*, so no "
                "*-automorphism of M_" + std::to_string(n) +
                "(C) intertwines the two Lip-norms: the spaces are not quantum isometric.";
  return r;
}

double check_unitary_invariance(std::size_t n, const Matrix& u, const HermitianMatrix& a) {
  const auto spec = LipSpec::trace(n);
  require_dim(spec, a, "check_unitary_invariance");
  const auto conjugated = conjugate_by_unitary(u, a);
  return std::abs(lip_eval(spec, conjugated) - lip_eval(spec, a));
}

QuasiLeibnizResult check_quasi_leibniz(const LipSpec& spec, const HermitianMatrix& a,
                                       const HermitianMatrix& b) {
  require_dim(spec, a, "check_quasi_leibniz");
  require_dim(spec, b, "check_quasi_leibniz");
  const double la = lip_eval(spec, a);
  const double lb = lip_eval(spec, b);
  const double na = operator_norm(a);
  const double nb = operator_norm(b);

  QuasiLeibnizResult r;
  r.lhs = std::max(lip_eval(spec, jordan(a, b)), lip_eval(spec, lie(a, b)));
  r.rhs = spec.leibniz_C() * (na * lb + nb * la) + spec.leibniz_D() * la * lb;
  r.margin = r.rhs - r.lhs;
  r.scale = (1.0 + na) * (1.0 + nb);
  return r;
}

bool check_kernel(const LipSpec& spec, const HermitianMatrix& a) {
  require_dim(spec, a, "check_kernel");
  const bool seminorm_vanishes = lip_eval(spec, a) <= kKernelSeminormThreshold;
  const bool is_scalar = deviation_from_trace(a) <= kKernelScalarThreshold;
  return seminorm_vanishes == is_scalar;
}

}  // namespace qmetric
