#pragma once

// Real root isolation of integer univariate polynomials by Descartes'
// subdivision, with Taylor shifts and quadratic interval refinement.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace zds::usolve {

// Coefficient i of x^i, no trailing zeros; the zero polynomial is empty.
using IntegerPolynomial = std::vector<mpz_class>;

// num / 2^exp
struct Dyadic {
  mpz_class num;
  unsigned long exp = 0;
};

// Open interval (a/2^k, b/2^k), a < b.
struct DyadicInterval {
  mpz_class a;
  mpz_class b;
  unsigned long k = 0;
};

struct IsolationResult {
  std::vector<DyadicInterval> intervals;  // increasing, pairwise disjoint
  std::vector<Dyadic> exact_roots;        // increasing
  size_t count() const { return intervals.size() + exact_roots.size(); }
};

struct Config {
  size_t shift_threshold = 512;
  size_t initial_precision = 0;  // 0: 2 deg + 64
  size_t max_depth = 0;          // 0: derived from degree and coefficient size
};

void trim(IntegerPolynomial& f);
inline long degree(const IntegerPolynomial& f) { return static_cast<long>(f.size()) - 1; }

// Smallest k >= 0 with 2^k >= 1 + max |a_i / a_d|.
long root_bound(const IntegerPolynomial& f);

// Smallest k with every root of modulus below 2^k by Fujiwara's bound, up to a factor 4.
long fujiwara_bound(const IntegerPolynomial& f);

IntegerPolynomial mul(const IntegerPolynomial& a, const IntegerPolynomial& b);

IntegerPolynomial taylor_shift_classical(const IntegerPolynomial& f);
IntegerPolynomial taylor_shift_fast(const IntegerPolynomial& f, size_t threshold = 512);
// f(x + 1), classical below the threshold degree.
IntegerPolynomial taylor_shift_1(const IntegerPolynomial& f, size_t threshold = 512);

// f(2^k x) for k >= 0; 2^(d|k|) f(2^k x) for k < 0.
IntegerPolynomial scale_2exp(const IntegerPolynomial& f, long k);

struct Variations {
  size_t count = 0;
  bool certified = true;
};

// Sign changes of the coefficients truncated to precision_bits leading bits.
Variations sign_variations(const IntegerPolynomial& f, size_t precision_bits);

IntegerPolynomial primitive_part(const IntegerPolynomial& f);
// f / gcd(f, f'), primitive with positive leading coefficient.
IntegerPolynomial squarefree_part(const IntegerPolynomial& f);

// Sign of f(c / 2^k), exact.
int sign_at(const IntegerPolynomial& f, const mpz_class& c, unsigned long k);

// Roots in (0, 1). Throws NotSquarefree when the depth cap is exceeded.
IsolationResult descartes_isolate_01(const IntegerPolynomial& f, const Config& cfg = {});

// All distinct real roots. Throws ZeroPolynomial.
IsolationResult isolate_real_roots(const IntegerPolynomial& f, const Config& cfg = {});

// Subinterval of I still isolating, of width at most 2^target_exp.
// Throws NotIsolating when f has no sign change over I.
DyadicInterval refine_interval(const IntegerPolynomial& f, const DyadicInterval& I, long target_exp);

// -1, 0, 1 as x <, =, > y.
int compare(const Dyadic& x, const Dyadic& y);

}  // namespace zds::usolve
