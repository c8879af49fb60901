#pragma once

// Multi-modular solving over Q: modular images of the parametrization are
// combined by CRT and lifted by rational reconstruction.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "zdsolve/f4.hpp"
#include "zdsolve/fglm.hpp"
#include "zdsolve/polyring.hpp"

namespace zds::multimod {

// Random primes in ]2^30, 2^31[, never repeated.
class PrimeStream {
public:
  explicit PrimeStream(uint64_t seed) : rng_(seed) {}
  uint32_t next();
  size_t emitted() const { return seen_.size(); }
  bool contains(uint32_t p) const { return seen_.count(p) != 0; }

private:
  std::mt19937_64 rng_;
  std::set<uint32_t> seen_;
};

// p/q with |p|, q <= floor(sqrt(M / 2)), p = a q mod M; nullopt when none exists.
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& M);

// Residue of a rational mod p; nullopt when p divides the denominator.
std::optional<Residue> reduce_rational(const mpq_class& x, uint32_t p);

// Shape of the coefficient vector of a modular image.
struct Layout {
  size_t n = 0;
  long deg_g = -1;
  long deg_w = -1;
  bool operator==(const Layout&) const = default;
};

class CrtAccumulator {
public:
  bool empty() const { return residues_.empty(); }
  const Layout& layout() const { return layout_; }
  const mpz_class& modulus() const { return modulus_; }
  const std::vector<mpz_class>& residues() const { return residues_; }
  size_t primes() const { return primes_; }

  // False (and no change) when the layout differs from the accumulated one.
  bool add(const Layout& layout, const std::vector<Residue>& values, uint32_t p);

private:
  Layout layout_;
  mpz_class modulus_ = 1;
  std::vector<mpz_class> residues_;
  size_t primes_ = 0;
};

// Coefficient slots of a modular parametrization: g, w, then the Kronecker
// numerators v_i w' mod w, each padded to deg w entries.
Layout layout_of(const fglm::RationalParametrization& R);
std::vector<Residue> image_slots(const fglm::RationalParametrization& R);

// x_i = -vt[i](theta) / w'(theta) for the roots theta of w. With a linear
// form c, the last coordinate is y = x_n + sum c_i x_i; x_n is recovered as
// y - sum c_i x_i.
struct LiftedParametrization {
  size_t n = 0;
  size_t dimension = 0;
  std::vector<mpq_class> g;
  std::vector<mpq_class> w;
  std::vector<std::vector<mpq_class>> vt;
  std::vector<long> linear_form;
  bool certified = false;
  size_t primes_used = 0;
};

LiftedParametrization reconstruct(const CrtAccumulator& acc, bool& ok);
// Reduces a lifted parametrization to the slot vector of its image mod p.
std::optional<std::vector<Residue>> reduce_lifted(const LiftedParametrization& L, uint32_t p);

// Tracer: learn on p0 and replay. Exact, Probabilistic: independent F4 per prime.
enum class LaMode { Tracer, Exact, Probabilistic };

struct Config {
  LaMode la = LaMode::Tracer;
  size_t max_primes = 4096;
  unsigned threads = 1;
  uint64_t seed = 0;
  // Nonzero: solve modulo this prime only.
  uint32_t prime = 0;
  bool single_prime = false;
  size_t max_bad_primes = 10;
  size_t max_relearn = 3;
  size_t max_substitutions = 3;
  size_t first_reconstruction_bits = 32;
  fglm::Config fglm;
};

struct Diagnostics {
  size_t primes_used = 0;
  size_t bad_primes = 0;
  size_t relearns = 0;
  size_t reconstructions = 0;
  double seconds_learn = 0;
  double seconds_images = 0;
};

struct Outcome {
  bool modular = false;
  fglm::RationalParametrization modular_result;  // single-prime mode
  LiftedParametrization lifted;
  std::vector<ZPolynomial> system;               // after the linear substitution, if any
  Diagnostics diag;
};

// Throws PositiveDimension, Unverified, UnluckyLearningPrime, TooManyBadPrimes.
Outcome solve_over_rationals(const std::vector<ZPolynomial>& F, size_t nvars, const Config& cfg = {});

// One modular run of the substituted system: F4 then sparse FGLM.
fglm::RationalParametrization solve_modular(const std::vector<ZPolynomial>& F, size_t nvars, uint32_t p,
                                            uint64_t seed, const fglm::Config& cfg = {},
                                            std::optional<f4::Trace>* trace = nullptr);

}  // namespace zds::multimod
