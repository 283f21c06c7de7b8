#include <cstdlib>
#include <cstring>

#include "bca/ff/kernels.hpp"

namespace bca::ff::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return has;
#else
  return false;
#endif
}

const KernelTable& active_kernels(std::uint32_t p) {
  static const KernelTable* vec = []() -> const KernelTable* {
    const char* force = std::getenv("BCA_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0) return nullptr;
    if (!cpu_has_avx2()) return nullptr;
    return avx2_kernels();
  }();
  if (vec != nullptr && p <= kMaxVectorPrime) return *vec;
  return scalar_kernels();
}

}  // namespace bca::ff::kernels
