#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Inner loops of the dense complex arithmetic. Every kernel has a scalar
// reference implementation; x86-64 builds add AVX2/FMA variants. The active
// backend is chosen once per process: the best one the CPU supports, unless
// QMETRIC_KERNELS=scalar is set in the environment.

namespace qmetric::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

struct KernelTable {
  /// c[m x n] = a[m x k] * b[k x n], all row-major; c is overwritten.
  void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
               cplx* c);
  /// (x, y) <- (m00 x + m01 y, m10 x + m11 y), elementwise over len entries.
  void (*rot)(std::size_t len, cplx* x, cplx* y, cplx m00, cplx m01, cplx m10, cplx m11);
  /// sum_i conj(x_i) * y_i.
  cplx (*dotc)(std::size_t len, const cplx* x, const cplx* y);
};

[[nodiscard]] bool available(Backend backend) noexcept;
[[nodiscard]] const KernelTable& table(Backend backend);
[[nodiscard]] Backend active() noexcept;
[[nodiscard]] std::string_view name(Backend backend) noexcept;

void gemm(std::size_t m, std::size_t k, std::size_t n, std::span<const cplx> a,
          std::span<const cplx> b, std::span<cplx> c);
void rot(std::span<cplx> x, std::span<cplx> y, cplx m00, cplx m01, cplx m10, cplx m11);
cplx dotc(std::span<const cplx> x, std::span<const cplx> y);

namespace scalar {
void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b, cplx* c);
void rot(std::size_t len, cplx* x, cplx* y, cplx m00, cplx m01, cplx m10, cplx m11);
cplx dotc(std::size_t len, const cplx* x, const cplx* y);
}  // namespace scalar

namespace avx2 {
void gemm(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b, cplx* c);
void rot(std::size_t len, cplx* x, cplx* y, cplx m00, cplx m01, cplx m10, cplx m11);
cplx dotc(std::size_t len, const cplx* x, const cplx* y);
}  // namespace avx2

}  // namespace qmetric::kernels
