#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Row kernels for elimination over a prime field F_p. Every kernel has a
// scalar reference version and, on x86-64, an AVX2 version; the active table
// is chosen once at runtime from CPUID. Setting BCA_FORCE_SCALAR=1 in the
// environment pins the scalar table.
//
// Contract shared by all variants: inputs are reduced (< p), outputs are
// reduced, and results are bit-identical across variants.

namespace bca::ff::kernels {

/// Largest prime the vector kernels accept; above it the dispatcher always
/// routes to the scalar kernels (products must fit in 31 bits).
inline constexpr std::uint32_t kMaxVectorPrime = 32749;

struct KernelTable {
  std::string_view name;
  /// y[i] = (y[i] + c * x[i]) mod p
  void (*axpy)(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
               std::uint32_t p);
  /// y[i] = (c * y[i]) mod p
  void (*scale)(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p);
};

const KernelTable& scalar_kernels();
/// Null when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();
bool cpu_has_avx2();

/// Table picked for prime p on this machine.
const KernelTable& active_kernels(std::uint32_t p);

}  // namespace bca::ff::kernels
