#include "basecraft/kernels.hpp"

#if defined(__x86_64__) && defined(BASECRAFT_HAVE_AVX2)
#include <immintrin.h>

namespace basecraft::kernels {

namespace {

void compose_avx2(const std::uint32_t *a, const std::uint32_t *b,
                  std::uint32_t *out, std::size_t n) {
  std::size_t i = 0;
  const int *base = reinterpret_cast<const int *>(b);
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
    __m256i v = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + i), v);
  }
  for (; i < n; ++i)
    out[i] = b[a[i]];
}

// No AVX2 scatter; the scalar loop is already store-bound.
void invert_avx2(const std::uint32_t *a, std::uint32_t *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[a[i]] = static_cast<std::uint32_t>(i);
}

std::size_t count_fixed_avx2(const std::uint32_t *a, std::size_t n) {
  std::size_t i = 0, c = 0;
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
    __m256i eq = _mm256_cmpeq_epi32(v, iota);
    c += static_cast<std::size_t>(
        __builtin_popcount(_mm256_movemask_ps(_mm256_castsi256_ps(eq))));
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i)
    c += (a[i] == i);
  return c;
}

bool is_identity_avx2(const std::uint32_t *a, std::size_t n) {
  std::size_t i = 0;
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
    __m256i x = _mm256_xor_si256(v, iota);
    if (!_mm256_testz_si256(x, x))
      return false;
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i)
    if (a[i] != i)
      return false;
  return true;
}

bool equal_avx2(const std::uint32_t *a, const std::uint32_t *b,
                std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i));
    __m256i d = _mm256_xor_si256(x, y);
    if (!_mm256_testz_si256(d, d))
      return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i])
      return false;
  return true;
}

void and_into_avx2(std::uint64_t *acc, const std::uint64_t *row,
                   std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(acc + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(acc + i),
                        _mm256_and_si256(x, y));
  }
  for (; i < words; ++i)
    acc[i] &= row[i];
}

bool any_set_avx2(const std::uint64_t *a, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
    if (!_mm256_testz_si256(x, x))
      return true;
  }
  for (; i < words; ++i)
    if (a[i])
      return true;
  return false;
}

} // namespace

const KernelTable *avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{"avx2",          compose_avx2,
                                 invert_avx2,     count_fixed_avx2,
                                 is_identity_avx2, equal_avx2,
                                 and_into_avx2,   any_set_avx2};
  return supported ? &table : nullptr;
}

} // namespace basecraft::kernels

#else

namespace basecraft::kernels {
const KernelTable *avx2() { return nullptr; }
} // namespace basecraft::kernels

#endif
