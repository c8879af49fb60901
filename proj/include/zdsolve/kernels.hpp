#pragma once

// Data-parallel inner loops over Z/pZ. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant; the active variant is chosen
// once at startup from CPUID and can be overridden for equivalence testing.
//
// Accumulator contract shared by all variants: 64-bit lanes hold values in
// [0, p^2). A product a*b < p^2 < 2^62 is subtracted (or added as a - p^2),
// and p^2 is added back when the signed lane goes negative. Results are
// bit-identical across variants.

#include <cstddef>
#include <cstdint>
#include <span>

namespace zds::kernels {

enum class Backend { Scalar, Avx2 };

bool avx2_available();
Backend active_backend();
// Falls back to Scalar when the requested backend is not supported.
void set_backend(Backend b);
const char* backend_name(Backend b);

// Returns sum u[i]*v[i] as a lane value in [0, p^2) (not reduced mod p).
uint64_t dot_lanes(const uint32_t* u, const uint32_t* v, size_t n, uint64_t p2);

// row[i] = (row[i] - a*v[i]) mod p^2, row entries in [0, p^2).
void sub_mul(int64_t* row, uint32_t a, const uint32_t* v, size_t n, uint64_t p2);

// row[cols[i]] = (row[cols[i]] - a*v[i]) mod p^2. Scatter, scalar on every backend.
inline void sub_mul_sparse(int64_t* row, uint32_t a, const uint32_t* cols, const uint32_t* v, size_t n,
                           uint64_t p2) {
  const int64_t mod2 = static_cast<int64_t>(p2);
  const uint64_t am = a;
  for (size_t i = 0; i < n; ++i) {
    int64_t x = row[cols[i]] - static_cast<int64_t>(am * v[i]);
    x += (x >> 63) & mod2;
    row[cols[i]] = x;
  }
}

namespace scalar {
uint64_t dot_lanes(const uint32_t* u, const uint32_t* v, size_t n, uint64_t p2);
void sub_mul(int64_t* row, uint32_t a, const uint32_t* v, size_t n, uint64_t p2);
}  // namespace scalar

namespace avx2 {
uint64_t dot_lanes(const uint32_t* u, const uint32_t* v, size_t n, uint64_t p2);
void sub_mul(int64_t* row, uint32_t a, const uint32_t* v, size_t n, uint64_t p2);
}  // namespace avx2

}  // namespace zds::kernels
