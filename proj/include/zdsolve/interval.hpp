#pragma once

// Closed intervals with MPFR endpoints, rounded outward.

#include <gmpxx.h>
#include <mpfr.h>

namespace zds::ia {

class Interval {
public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  static Interval point(const mpq_class& x, mpfr_prec_t prec);
  // [a / 2^k, b / 2^k]
  static Interval dyadic(const mpz_class& a, const mpz_class& b, unsigned long k, mpfr_prec_t prec);

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  bool contains_zero() const;
  // log2 of the width, -infinity for a point.
  double log2_width() const;
  // width <= 2^e
  bool width_at_most(long e) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Requires 0 not in b.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

private:
  mpfr_t lo_;
  mpfr_t hi_;
};

// Exact dyadic value of a finite MPFR number: num / 2^k with k >= 0.
void to_dyadic(mpfr_srcptr x, mpz_class& num, unsigned long& k);

}  // namespace zds::ia
