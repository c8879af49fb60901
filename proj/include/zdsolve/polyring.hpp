#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "zdsolve/error.hpp"
#include "zdsolve/modarith.hpp"

namespace zds {

using Exponent = uint16_t;
using MonomialId = uint32_t;

enum class Order { DRL, LEX };
enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

struct ExponentVector {
  std::vector<Exponent> e;

  ExponentVector() = default;
  explicit ExponentVector(size_t n) : e(n, 0) {}
  ExponentVector(std::initializer_list<Exponent> il) : e(il) {}

  size_t size() const { return e.size(); }
  uint32_t degree() const;
  bool operator==(const ExponentVector&) const = default;
};

// Raw comparison on n exponents; the table uses this on its flat storage.
int compare_raw(const Exponent* a, const Exponent* b, size_t n, Order order);
Cmp compare_monomials(const ExponentVector& a, const ExponentVector& b, Order order);

// Interning table. Ids are dense and stable for the table's lifetime; growth
// rehashes slots only. Hash is linear in the exponents so hash(a*b) is the
// sum of the factors' hashes.
class MonomialTable {
public:
  explicit MonomialTable(size_t nvars, size_t initial_slots = size_t{1} << 16);

  size_t nvars() const { return n_; }
  size_t size() const { return deg_.size(); }
  size_t slots() const { return slots_.size(); }

  MonomialId intern(const Exponent* e);
  MonomialId intern(const ExponentVector& e);
  MonomialId one() const { return 0; }

  const Exponent* exps(MonomialId id) const { return exps_.data() + size_t{id} * n_; }
  ExponentVector exponents(MonomialId id) const;
  uint32_t degree(MonomialId id) const { return deg_[id]; }
  uint32_t mask(MonomialId id) const { return mask_[id]; }

  MonomialId mul(MonomialId a, MonomialId b);
  MonomialId lcm(MonomialId a, MonomialId b);
  // b / a; requires divides(a, b).
  MonomialId quotient(MonomialId b, MonomialId a);
  bool divides(MonomialId a, MonomialId b) const {
    if (mask_[a] & ~mask_[b]) return false;
    return divides_exact(a, b);
  }
  bool divides_exact(MonomialId a, MonomialId b) const;
  bool coprime(MonomialId a, MonomialId b) const;

  // DRL comparison of two interned monomials.
  int cmp(MonomialId a, MonomialId b) const {
    if (deg_[a] != deg_[b]) return deg_[a] < deg_[b] ? -1 : 1;
    return compare_raw(exps(a), exps(b), n_, Order::DRL);
  }
  int cmp(MonomialId a, MonomialId b, Order order) const {
    return order == Order::DRL ? cmp(a, b) : compare_raw(exps(a), exps(b), n_, Order::LEX);
  }

  // Threshold used for variable i's mask bit (i < 32).
  Exponent mask_threshold(size_t i) const { return thresholds_[i]; }
  // Forces a rebuild at the current size (recomputes thresholds and masks).
  void rebuild() { rehash(slots_.size()); }

private:
  MonomialId insert_hashed(const Exponent* e, uint64_t h);
  uint32_t compute_mask(const Exponent* e) const;
  void rehash(size_t new_slots);
  size_t slot_of(uint64_t h) const { return static_cast<size_t>((h * 0x9E3779B97F4A7C15ULL) >> shift_); }

  size_t n_;
  std::vector<uint64_t> weights_;
  std::vector<Exponent> exps_;
  std::vector<uint32_t> deg_;
  std::vector<uint64_t> hash_;
  std::vector<uint32_t> mask_;
  std::vector<uint32_t> slots_;  // id + 1, 0 = empty
  unsigned shift_;
  std::vector<Exponent> thresholds_;
  std::vector<Exponent> scratch_;
};

// Terms sorted strictly decreasing in DRL of the owning table, no zero coefficients.
struct SparsePolynomial {
  std::vector<MonomialId> mons;
  std::vector<Residue> coeffs;

  size_t size() const { return mons.size(); }
  bool empty() const { return mons.empty(); }
  MonomialId lead() const { return mons.front(); }
  bool operator==(const SparsePolynomial&) const = default;
};

// Sorts terms, merges duplicates and drops zeros.
void normalize(SparsePolynomial& f, const MonomialTable& t, const Modulus& m);
void make_monic(SparsePolynomial& f, const Modulus& m);

// Integer-coefficient polynomial in exponent-vector form (order unspecified).
struct ZTerm {
  ExponentVector exp;
  mpz_class coeff;
};
struct ZPolynomial {
  std::vector<ZTerm> terms;
  bool is_zero() const { return terms.empty(); }
};

// Merges equal monomials, drops zeros, sorts decreasing DRL.
void canonicalize(ZPolynomial& f);
uint32_t total_degree(const ZPolynomial& f);

// Image mod p, interned in t. Zero image gives an empty polynomial.
SparsePolynomial reduce_mod(const ZPolynomial& f, MonomialTable& t, const Modulus& m);

// f with x_last replaced by x_last - sum_{i<last} c_i x_i.
ZPolynomial substitute_last(const ZPolynomial& f, const std::vector<long>& c);

}  // namespace zds
