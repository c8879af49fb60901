#include "zdsolve/kernels.hpp"

namespace zds::kernels::scalar {

uint64_t dot_lanes(const uint32_t* u, const uint32_t* v, size_t n, uint64_t p2) {
  const int64_t mod2 = static_cast<int64_t>(p2);
  // Two independent lanes, mirroring the even/odd split of the vector kernel.
  int64_t acc0 = 0;
  int64_t acc1 = 0;
  size_t i = 0;
  for (; i + 1 < n; i += 2) {
    acc0 += static_cast<int64_t>(static_cast<uint64_t>(u[i]) * v[i]) - mod2;
    acc0 += (acc0 >> 63) & mod2;
    acc1 += static_cast<int64_t>(static_cast<uint64_t>(u[i + 1]) * v[i + 1]) - mod2;
    acc1 += (acc1 >> 63) & mod2;
  }
  if (i < n) {
    acc0 += static_cast<int64_t>(static_cast<uint64_t>(u[i]) * v[i]) - mod2;
    acc0 += (acc0 >> 63) & mod2;
  }
  int64_t acc = acc0 + acc1 - mod2;
  acc += (acc >> 63) & mod2;
  return static_cast<uint64_t>(acc);
}

void sub_mul(int64_t* row, uint32_t a, const uint32_t* v, size_t n, uint64_t p2) {
  const int64_t mod2 = static_cast<int64_t>(p2);
  const uint64_t am = a;
  for (size_t i = 0; i < n; ++i) {
    int64_t x = row[i] - static_cast<int64_t>(am * v[i]);
    x += (x >> 63) & mod2;
    row[i] = x;
  }
}

}  // namespace zds::kernels::scalar
