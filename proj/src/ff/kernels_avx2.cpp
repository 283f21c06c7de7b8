// Compiled with -mavx2 only when the toolchain supports it (see CMakeLists).
#include "bca/ff/kernels.hpp"

#if defined(BCA_HAVE_AVX2)
#include <immintrin.h>

namespace bca::ff::kernels {

namespace {

// r = t mod p for 0 <= t < 2^31 and p <= kMaxVectorPrime.
// The float quotient estimate is within 1 of floor(t / p) since t / p < p + 1 < 2^15.
inline __m256i reduce(__m256i t, __m256i vp, __m256 vinvp) {
  __m256 tf = _mm256_cvtepi32_ps(t);
  __m256i qi = _mm256_cvttps_epi32(_mm256_mul_ps(tf, vinvp));
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(qi, vp));
  // r in (-p, 2p): fold into [0, p)
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
  __m256i ge = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vp, _mm256_set1_epi32(1)));
  r = _mm256_sub_epi32(r, _mm256_and_si256(ge, vp));
  return r;
}

void axpy_avx2(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
               std::uint32_t p) {
  if (c == 0) return;
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 vinvp = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const std::size_t n = y.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    __m256i t = _mm256_add_epi32(vy, _mm256_mullo_epi32(vx, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), reduce(t, vp, vinvp));
  }
  const std::uint64_t cc = c;
  for (; i < n; ++i) y[i] = static_cast<std::uint32_t>((y[i] + cc * x[i]) % p);
}

void scale_avx2(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 vinvp = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const std::size_t n = y.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i),
                        reduce(_mm256_mullo_epi32(vy, vc), vp, vinvp));
  }
  const std::uint64_t cc = c;
  for (; i < n; ++i) y[i] = static_cast<std::uint32_t>(cc * y[i] % p);
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", &axpy_avx2, &scale_avx2};
  return &table;
}

}  // namespace bca::ff::kernels

#else

namespace bca::ff::kernels {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace bca::ff::kernels

#endif
