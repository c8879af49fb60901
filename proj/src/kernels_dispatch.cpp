#include "zdsolve/kernels.hpp"

#include <atomic>

namespace zds::kernels {

namespace {

using DotFn = uint64_t (*)(const uint32_t*, const uint32_t*, size_t, uint64_t);
using SubMulFn = void (*)(int64_t*, uint32_t, const uint32_t*, size_t, uint64_t);

struct Table {
  Backend backend;
  DotFn dot;
  SubMulFn sub_mul;
};

constexpr Table kScalar{Backend::Scalar, &scalar::dot_lanes, &scalar::sub_mul};
constexpr Table kAvx2{Backend::Avx2, &avx2::dot_lanes, &avx2::sub_mul};

const Table* detect() { return avx2_available() ? &kAvx2 : &kScalar; }

std::atomic<const Table*>& active() {
  static std::atomic<const Table*> t{detect()};
  return t;
}

}  // namespace

bool avx2_available() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Backend active_backend() { return active().load(std::memory_order_relaxed)->backend; }

void set_backend(Backend b) {
  active().store(b == Backend::Avx2 && avx2_available() ? &kAvx2 : &kScalar, std::memory_order_relaxed);
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

uint64_t dot_lanes(const uint32_t* u, const uint32_t* v, size_t n, uint64_t p2) {
  return active().load(std::memory_order_relaxed)->dot(u, v, n, p2);
}

void sub_mul(int64_t* row, uint32_t a, const uint32_t* v, size_t n, uint64_t p2) {
  active().load(std::memory_order_relaxed)->sub_mul(row, a, v, n, p2);
}

}  // namespace zds::kernels
