#include "qmetric/kernels.hpp"

namespace qmetric::kernels::scalar {

namespace {

// Plain product without the Annex G special-value handling of std::complex.
inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx s = a[i * k + p];
      if (s == cplx{}) continue;
      const cplx* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += mul(s, brow[j]);
    }
  }
}

void rot(std::size_t len, cplx* x, cplx* y, cplx m00, cplx m01, cplx m10, cplx m11) {
  for (std::size_t i = 0; i < len; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = mul(m00, xi) + mul(m01, yi);
    y[i] = mul(m10, xi) + mul(m11, yi);
  }
}

cplx dotc(std::size_t len, const cplx* x, const cplx* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace qmetric::kernels::scalar
