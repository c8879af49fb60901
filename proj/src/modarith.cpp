#include "zdsolve/modarith.hpp"

#include "zdsolve/kernels.hpp"

namespace zds {

namespace {

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t n) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t n) {
  uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod64(r, a, n);
    a = mulmod64(a, a, n);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Jim Sinclair's base set, deterministic below 2^64.
  for (uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(uint32_t p) : p_(p), p2_(static_cast<uint64_t>(p) * p) {
  if (p >= (1u << 31) || !is_prime_u64(p)) throw Error(ErrorCode::InvalidModulus);
}

Residue Modulus::inv(Residue a) const {
  if (a == 0) throw Error(ErrorCode::NotInvertible);
  int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw Error(ErrorCode::NotInvertible);
  return reduce_signed(t0);
}

Residue Modulus::pow(Residue a, uint64_t e) const {
  return static_cast<Residue>(powmod64(a, e, p_));
}

Residue dot_product_delayed(std::span<const Residue> u, std::span<const Residue> v, const Modulus& m) {
  if (u.size() != v.size()) throw Error(ErrorCode::LengthMismatch);
  return m.reduce(kernels::dot_lanes(u.data(), v.data(), u.size(), m.p2()));
}

Residue dot_product_naive(std::span<const Residue> u, std::span<const Residue> v, const Modulus& m) {
  if (u.size() != v.size()) throw Error(ErrorCode::LengthMismatch);
  Residue acc = 0;
  for (size_t i = 0; i < u.size(); ++i) acc = m.add(acc, m.mul(u[i], v[i]));
  return acc;
}

}  // namespace zds
