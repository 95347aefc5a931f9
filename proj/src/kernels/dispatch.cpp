#include <cstdlib>
#include <string_view>

#include "qmetric/error.hpp"
#include "qmetric/kernels.hpp"

namespace qmetric::kernels {

namespace {

constexpr KernelTable kScalarTable{&scalar::gemm, &scalar::rot, &scalar::dotc};
#ifdef QMETRIC_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{&avx2::gemm, &avx2::rot, &avx2::dotc};
#endif

bool cpu_has_avx2() noexcept {
#ifdef QMETRIC_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend select() noexcept {
  if (const char* env = std::getenv("QMETRIC_KERNELS"); env != nullptr) {
    if (std::string_view(env) == "scalar") return Backend::scalar;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

const KernelTable& active_table() {
  static const KernelTable& t = table(active());
  return t;
}

}  // namespace

bool available(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Backend backend) {
  if (!available(backend)) throw Error("kernel backend not available on this CPU");
#ifdef QMETRIC_HAVE_AVX2_KERNELS
  if (backend == Backend::avx2) return kAvx2Table;
#endif
  return kScalarTable;
}

Backend active() noexcept {
  static const Backend b = select();
  return b;
}

std::string_view name(Backend backend) noexcept {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

void gemm(std::size_t m, std::size_t k, std::size_t n, std::span<const cplx> a,
          std::span<const cplx> b, std::span<cplx> c) {
  active_table().gemm(m, k, n, a.data(), b.data(), c.data());
}

void rot(std::span<cplx> x, std::span<cplx> y, cplx m00, cplx m01, cplx m10, cplx m11) {
  active_table().rot(x.size(), x.data(), y.data(), m00, m01, m10, m11);
}

cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  return active_table().dotc(x.size(), x.data(), y.data());
}

}  // namespace qmetric::kernels
