#include "bca/ff/kernels.hpp"

namespace bca::ff::kernels {

namespace {

void axpy_scalar(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
                 std::uint32_t p) {
  if (c == 0) return;
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = static_cast<std::uint32_t>((y[i] + cc * x[i]) % p);
}

void scale_scalar(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (auto& v : y) v = static_cast<std::uint32_t>(cc * v % p);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &axpy_scalar, &scale_scalar};
  return table;
}

}  // namespace bca::ff::kernels
