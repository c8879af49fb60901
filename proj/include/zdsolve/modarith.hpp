#pragma once

#include <cstdint>
#include <span>

#include "zdsolve/error.hpp"

namespace zds {

// A residue in [0, p). Hot loops work on raw uint32_t arrays; the functions
// below are the reference semantics for every kernel.
using Residue = uint32_t;

bool is_prime_u64(uint64_t n);

// Prime modulus p < 2^31. The multi-modular driver only draws primes from
// ]2^30, 2^31[, smaller primes are accepted for tests.
class Modulus {
public:
  explicit Modulus(uint32_t p);

  uint32_t p() const { return p_; }
  // p^2, the correction constant of delayed-reduction accumulators.
  uint64_t p2() const { return p2_; }

  Residue reduce(uint64_t x) const { return static_cast<Residue>(x % p_); }
  Residue reduce_signed(int64_t x) const {
    int64_t r = x % static_cast<int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  Residue add(Residue a, Residue b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<uint64_t>(a) * b % p_);
  }
  // Extended Euclid. Throws ErrorCode::NotInvertible on zero.
  Residue inv(Residue a) const;
  Residue pow(Residue a, uint64_t e) const;

  bool operator==(const Modulus& o) const { return p_ == o.p_; }

private:
  uint32_t p_;
  uint64_t p2_;
};

// Sum of u[i]*v[i] mod p. Products are accumulated in 64-bit lanes kept in
// [0, p^2): after each product the lane is corrected by adding p^2 when the
// signed intermediate goes negative. One modular reduction at the end.
Residue dot_product_delayed(std::span<const Residue> u, std::span<const Residue> v, const Modulus& m);

// Schoolbook reference: reduce after every multiply and every add.
Residue dot_product_naive(std::span<const Residue> u, std::span<const Residue> v, const Modulus& m);

}  // namespace zds
