// Compiled with -mavx2; only reached after a CPUID check.
#include "zdsolve/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace zds::kernels::avx2 {

namespace {

inline __m256i correct(__m256i x, __m256i mod2) {
  const __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), x);
  return _mm256_add_epi64(x, _mm256_and_si256(neg, mod2));
}

inline uint64_t horizontal(__m256i acc, int64_t mod2) {
  alignas(32) int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  int64_t s = 0;
  for (int64_t l : lanes) {
    s += l - mod2;
    s += (s >> 63) & mod2;
  }
  return static_cast<uint64_t>(s);
}

}  // namespace

uint64_t dot_lanes(const uint32_t* u, const uint32_t* v, size_t n, uint64_t p2) {
  const int64_t m2 = static_cast<int64_t>(p2);
  const __m256i mod2 = _mm256_set1_epi64x(m2);
  __m256i even = _mm256_setzero_si256();
  __m256i odd = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    // mul_epu32 multiplies the low 32 bits of each 64-bit lane.
    const __m256i pe = _mm256_mul_epu32(a, b);
    const __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    even = correct(_mm256_sub_epi64(_mm256_add_epi64(even, pe), mod2), mod2);
    odd = correct(_mm256_sub_epi64(_mm256_add_epi64(odd, po), mod2), mod2);
  }
  int64_t s = static_cast<int64_t>(horizontal(even, m2)) + static_cast<int64_t>(horizontal(odd, m2)) - m2;
  s += (s >> 63) & m2;
  for (; i < n; ++i) {
    s += static_cast<int64_t>(static_cast<uint64_t>(u[i]) * v[i]) - m2;
    s += (s >> 63) & m2;
  }
  return static_cast<uint64_t>(s);
}

void sub_mul(int64_t* row, uint32_t a, const uint32_t* v, size_t n, uint64_t p2) {
  const int64_t m2 = static_cast<int64_t>(p2);
  const __m256i mod2 = _mm256_set1_epi64x(m2);
  const __m256i mult = _mm256_set1_epi64x(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i w = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(v + i)));
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    r = correct(_mm256_sub_epi64(r, _mm256_mul_epu32(w, mult)), mod2);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), r);
  }
  const uint64_t am = a;
  for (; i < n; ++i) {
    int64_t x = row[i] - static_cast<int64_t>(am * v[i]);
    x += (x >> 63) & m2;
    row[i] = x;
  }
}

}  // namespace zds::kernels::avx2

#else

namespace zds::kernels::avx2 {
uint64_t dot_lanes(const uint32_t* u, const uint32_t* v, size_t n, uint64_t p2) {
  return scalar::dot_lanes(u, v, n, p2);
}
void sub_mul(int64_t* row, uint32_t a, const uint32_t* v, size_t n, uint64_t p2) {
  scalar::sub_mul(row, a, v, n, p2);
}
}  // namespace zds::kernels::avx2

#endif
