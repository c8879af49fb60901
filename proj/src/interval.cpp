#include "zdsolve/interval.hpp"

#include <algorithm>
#include <cmath>

#include "zdsolve/error.hpp"

namespace zds::ia {

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, o.prec());
  mpfr_init2(hi_, o.prec());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec());
    mpfr_set_prec(hi_, o.prec());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::point(const mpq_class& x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, x.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::dyadic(const mpz_class& a, const mpz_class& b, unsigned long k, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z_2exp(r.lo_, a.get_mpz_t(), -static_cast<long>(k), MPFR_RNDD);
  mpfr_set_z_2exp(r.hi_, b.get_mpz_t(), -static_cast<long>(k), MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

double Interval::log2_width() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double r = mpfr_zero_p(w) ? -INFINITY : static_cast<double>(mpfr_get_exp(w));
  mpfr_clear(w);
  return r;
}

bool Interval::width_at_most(long e) const {
  mpfr_t w;
  mpfr_init2(w, prec() + 2);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  bool ok = mpfr_cmp_ui_2exp(w, 1, e) <= 0;
  mpfr_clear(w);
  return ok;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = std::max(a.prec(), b.prec());
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_}, ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorCode::NotInvertible, "interval division by an interval containing 0");
  const mpfr_prec_t p = std::max(a.prec(), b.prec());
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_}, ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

void to_dyadic(mpfr_srcptr x, mpz_class& num, unsigned long& k) {
  if (mpfr_zero_p(x)) {
    num = 0;
    k = 0;
    return;
  }
  mpfr_exp_t e = mpfr_get_z_2exp(num.get_mpz_t(), x);
  if (e >= 0) {
    num <<= static_cast<unsigned long>(e);
    k = 0;
  } else {
    k = static_cast<unsigned long>(-e);
  }
  while (k > 0 && mpz_even_p(num.get_mpz_t())) {
    num >>= 1;
    --k;
  }
}

}  // namespace zds::ia
