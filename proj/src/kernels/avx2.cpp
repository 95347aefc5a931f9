// Compiled with -mavx2 -mfma; only reached when the CPU reports both.

#include <immintrin.h>

#include "qmetric/kernels.hpp"

namespace qmetric::kernels::avx2 {

namespace {

// A __m256d holds two complex doubles as [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// s * v for a broadcast complex scalar s = (sr, si).
inline __m256d cmul(__m256d sr, __m256d si, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(sr, v, _mm256_mul_pd(si, swapped));
}

inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx s = a[i * k + p];
      if (s == cplx{}) continue;
      const __m256d sr = _mm256_set1_pd(s.real());
      const __m256d si = _mm256_set1_pd(s.imag());
      const cplx* brow = b + p * n;
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        store2(crow + j, _mm256_add_pd(load2(crow + j), cmul(sr, si, load2(brow + j))));
      }
      for (; j < n; ++j) crow[j] += mul(s, brow[j]);
    }
  }
}

void rot(std::size_t len, cplx* x, cplx* y, cplx m00, cplx m01, cplx m10, cplx m11) {
  const __m256d r00 = _mm256_set1_pd(m00.real()), i00 = _mm256_set1_pd(m00.imag());
  const __m256d r01 = _mm256_set1_pd(m01.real()), i01 = _mm256_set1_pd(m01.imag());
  const __m256d r10 = _mm256_set1_pd(m10.real()), i10 = _mm256_set1_pd(m10.imag());
  const __m256d r11 = _mm256_set1_pd(m11.real()), i11 = _mm256_set1_pd(m11.imag());
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    store2(x + i, _mm256_add_pd(cmul(r00, i00, xv), cmul(r01, i01, yv)));
    store2(y + i, _mm256_add_pd(cmul(r10, i10, xv), cmul(r11, i11, yv)));
  }
  for (; i < len; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = mul(m00, xi) + mul(m01, yi);
    y[i] = mul(m10, xi) + mul(m11, yi);
  }
}

cplx dotc(std::size_t len, const cplx* x, const cplx* y) {
  // direct accumulates [xr*yr, xi*yi]; cross accumulates [xr*yi, xi*yr].
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  alignas(32) double d[4];
  alignas(32) double c[4];
  _mm256_store_pd(d, direct);
  _mm256_store_pd(c, cross);
  double re = (d[0] + d[1]) + (d[2] + d[3]);
  double im = (c[0] - c[1]) + (c[2] - c[3]);
  for (; i < len; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace qmetric::kernels::avx2
