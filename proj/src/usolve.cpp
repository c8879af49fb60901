#include "zdsolve/usolve.hpp"

#include <algorithm>
#include <cstring>
#include <map>

#include "zdsolve/error.hpp"
#include "zdsolve/modarith.hpp"
#include "zdsolve/upoly.hpp"

namespace zds::usolve {

void trim(IntegerPolynomial& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long root_bound(const IntegerPolynomial& f) {
  if (f.size() <= 1) return 0;
  mpz_class A = abs(f.back()), M = 0;
  for (size_t i = 0; i + 1 < f.size(); ++i)
    if (abs(f[i]) > M) M = abs(f[i]);
  // smallest k with 2^k A >= A + M
  mpz_class need = A + M;
  long k = 0;
  mpz_class cur = A;
  while (cur < need) {
    cur <<= 1;
    ++k;
  }
  return k;
}

long fujiwara_bound(const IntegerPolynomial& f) {
  if (f.size() <= 1) return 0;
  const size_t d = f.size() - 1;
  const long ld = static_cast<long>(mpz_sizeinbase(f[d].get_mpz_t(), 2));
  long e = 0;
  // 2^(e i) |a_d| > |a_(d-i)| for every i, then every root is below 2^(e+1).
  for (size_t i = 1; i <= d; ++i) {
    if (f[d - i] == 0) continue;
    long li = static_cast<long>(mpz_sizeinbase(f[d - i].get_mpz_t(), 2));
    long num = li - ld + 1;
    if (num > 0) e = std::max(e, (num + static_cast<long>(i) - 1) / static_cast<long>(i));
  }
  return e + 1;
}

namespace {

size_t max_bits(const IntegerPolynomial& f) {
  size_t b = 0;
  for (const auto& c : f)
    if (c != 0) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

// Writes |c| into limbs [off, off + width) of dst.
void put_limbs(mp_limb_t* dst, size_t off, const mpz_class& c) {
  size_t n = mpz_size(c.get_mpz_t());
  if (n) std::memcpy(dst + off, mpz_limbs_read(c.get_mpz_t()), n * sizeof(mp_limb_t));
}

// Packs sum c_i 2^(64 w i) into an integer (signed coefficients).
mpz_class pack(const IntegerPolynomial& f, size_t w) {
  const size_t total = f.size() * w;
  mpz_class pos, neg;
  mp_limb_t* p = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mp_limb_t* q = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  std::memset(p, 0, total * sizeof(mp_limb_t));
  std::memset(q, 0, total * sizeof(mp_limb_t));
  bool any_neg = false;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] > 0) put_limbs(p, i * w, f[i]);
    if (f[i] < 0) {
      put_limbs(q, i * w, f[i]);
      any_neg = true;
    }
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mpz_limbs_finish(neg.get_mpz_t(), any_neg ? static_cast<mp_size_t>(total) : 0);
  return pos - neg;
}

// Inverse of pack for len coefficients of absolute value below 2^(64 w - 1).
IntegerPolynomial unpack(const mpz_class& V, size_t w, size_t len) {
  IntegerPolynomial out(len);
  const int sign = sgn(V);
  const size_t n = mpz_size(V.get_mpz_t());
  const mp_limb_t* L = mpz_limbs_read(V.get_mpz_t());
  mpz_class half = mpz_class(1) << (64 * w - 1), base = mpz_class(1) << (64 * w);
  bool borrow = false;
  for (size_t i = 0; i < len; ++i) {
    mpz_class d;
    size_t off = i * w;
    if (off < n) {
      size_t cnt = std::min(w, n - off);
      mp_limb_t* dst = mpz_limbs_write(d.get_mpz_t(), static_cast<mp_size_t>(cnt));
      std::memcpy(dst, L + off, cnt * sizeof(mp_limb_t));
      size_t top = cnt;
      while (top > 0 && dst[top - 1] == 0) --top;
      mpz_limbs_finish(d.get_mpz_t(), static_cast<mp_size_t>(top));
    }
    if (borrow) d += 1;
    borrow = d >= half;
    if (borrow) d -= base;
    out[i] = sign < 0 ? mpz_class(-d) : d;
  }
  return out;
}

}  // namespace

IntegerPolynomial mul(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  const size_t len = a.size() + b.size() - 1;
  if (std::min(a.size(), b.size()) <= 8) {
    IntegerPolynomial r(len, 0);
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0)
        for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    trim(r);
    return r;
  }
  size_t bits = max_bits(a) + max_bits(b) + mpz_sizeinbase(mpz_class(std::min(a.size(), b.size())).get_mpz_t(), 2) + 2;
  size_t w = (bits + 63) / 64;
  mpz_class P = pack(a, w) * pack(b, w);
  IntegerPolynomial r = unpack(P, w, len);
  trim(r);
  return r;
}

IntegerPolynomial taylor_shift_classical(const IntegerPolynomial& f) {
  IntegerPolynomial a = f;
  const size_t n = a.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
  return a;
}

namespace {

IntegerPolynomial add(IntegerPolynomial a, const IntegerPolynomial& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

// (x + 1)^(2^j), j = 0, 1, ..., by repeated squaring.
class BinomialPowers {
public:
  const IntegerPolynomial& get(size_t j) {
    if (pw_.empty()) pw_.push_back({1, 1});
    while (pw_.size() <= j) pw_.push_back(mul(pw_.back(), pw_.back()));
    return pw_[j];
  }

private:
  std::vector<IntegerPolynomial> pw_;
};

IntegerPolynomial shift_rec(const IntegerPolynomial& f, size_t threshold, BinomialPowers& P) {
  if (f.size() <= threshold + 1 || f.size() <= 2) return taylor_shift_classical(f);
  size_t j = 0;
  while ((size_t{2} << j) < f.size()) ++j;
  const size_t h = size_t{1} << j;  // h < size <= 2h
  IntegerPolynomial lo(f.begin(), f.begin() + static_cast<long>(h));
  IntegerPolynomial hi(f.begin() + static_cast<long>(h), f.end());
  trim(lo);
  IntegerPolynomial r = add(shift_rec(lo, threshold, P), mul(P.get(j), shift_rec(hi, threshold, P)));
  r.resize(f.size(), 0);
  return r;
}

}  // namespace

IntegerPolynomial taylor_shift_fast(const IntegerPolynomial& f, size_t threshold) {
  BinomialPowers P;
  IntegerPolynomial r = shift_rec(f, std::max<size_t>(threshold, 1), P);
  r.resize(f.size(), 0);
  return r;
}

IntegerPolynomial taylor_shift_1(const IntegerPolynomial& f, size_t threshold) {
  if (f.size() <= threshold + 1) return taylor_shift_classical(f);
  return taylor_shift_fast(f, threshold);
}

IntegerPolynomial scale_2exp(const IntegerPolynomial& f, long k) {
  IntegerPolynomial r = f;
  if (f.empty()) return r;
  const size_t d = f.size() - 1;
  for (size_t i = 0; i <= d; ++i) {
    unsigned long s = k >= 0 ? static_cast<unsigned long>(k) * i : static_cast<unsigned long>(-k) * (d - i);
    r[i] <<= s;
  }
  return r;
}

namespace {

size_t count_changes(const std::vector<int>& signs) {
  size_t c = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++c;
    last = s;
  }
  return c;
}

}  // namespace

Variations sign_variations(const IntegerPolynomial& f, size_t precision_bits) {
  const size_t mb = max_bits(f);
  const size_t s = mb > precision_bits ? mb - precision_bits : 0;
  Variations v;
  std::vector<int> signs(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    if (s == 0) {
      signs[i] = sgn(f[i]);
      continue;
    }
    mpz_class c;
    mpz_fdiv_q_2exp(c.get_mpz_t(), f[i].get_mpz_t(), s);
    // f_i in [c, c + 1) 2^s
    if (c > 0)
      signs[i] = 1;
    else if (c < -1)
      signs[i] = -1;
    else
      v.certified = false;
  }
  v.count = count_changes(signs);
  return v;
}

IntegerPolynomial primitive_part(const IntegerPolynomial& f) {
  IntegerPolynomial r = f;
  trim(r);
  if (r.empty()) return r;
  mpz_class g = 0;
  for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (r.back() < 0) g = -g;
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

namespace {

IntegerPolynomial derivative(const IntegerPolynomial& f) {
  IntegerPolynomial r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

// Pseudo-remainder of a by b.
IntegerPolynomial prem(IntegerPolynomial a, const IntegerPolynomial& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    size_t off = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
    trim(a);
  }
  return a;
}

IntegerPolynomial gcd_primitive(IntegerPolynomial a, IntegerPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.empty()) {
    IntegerPolynomial r = primitive_part(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntegerPolynomial exact_quotient(IntegerPolynomial a, const IntegerPolynomial& b) {
  IntegerPolynomial q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    size_t off = a.size() - b.size();
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

bool squarefree_mod(const IntegerPolynomial& f, uint32_t p) {
  Modulus m(p);
  up::UPoly g(f.size());
  for (size_t i = 0; i < f.size(); ++i) g[i] = static_cast<Residue>(mpz_fdiv_ui(f[i].get_mpz_t(), p));
  if (g.back() == 0) return false;
  up::trim(g);
  return up::degree(up::gcd(g, up::derivative(g, m), m)) == 0;
}

}  // namespace

IntegerPolynomial squarefree_part(const IntegerPolynomial& f) {
  IntegerPolynomial g = primitive_part(f);
  if (g.size() <= 2) return g;
  for (uint32_t p : {2147483647u, 2147483629u, 2147483587u})
    if (squarefree_mod(g, p)) return g;
  IntegerPolynomial h = gcd_primitive(g, derivative(g));
  if (h.size() <= 1) return g;
  return primitive_part(exact_quotient(g, h));
}

int sign_at(const IntegerPolynomial& f, const mpz_class& c, unsigned long k) {
  if (f.empty()) return 0;
  const size_t d = f.size() - 1;
  mpz_class acc = f[d], t;
  for (size_t i = d; i-- > 0;) {
    acc *= c;
    t = f[i];
    t <<= k * (d - i);
    acc += t;
  }
  return sgn(acc);
}

int compare(const Dyadic& x, const Dyadic& y) {
  mpz_class a = x.num, b = y.num;
  if (x.exp < y.exp)
    a <<= (y.exp - x.exp);
  else
    b <<= (x.exp - y.exp);
  return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0);
}

namespace {

// Sign changes of (x + 1)^d g(1 / (x + 1)), from truncated coefficients when
// that suffices.
size_t node_variations(const IntegerPolynomial& g, size_t prec0, size_t threshold) {
  IntegerPolynomial R(g.rbegin(), g.rend());
  const size_t d = R.size() - 1;
  const size_t mb = max_bits(R);
  for (size_t P = prec0;; P *= 2) {
    const size_t s = mb > P ? mb - P : 0;
    if (s == 0) {
      IntegerPolynomial T = taylor_shift_1(R, threshold);
      std::vector<int> signs(T.size());
      for (size_t i = 0; i < T.size(); ++i) signs[i] = sgn(T[i]);
      return count_changes(signs);
    }
    IntegerPolynomial C(R.size());
    for (size_t i = 0; i < R.size(); ++i) mpz_fdiv_q_2exp(C[i].get_mpz_t(), R[i].get_mpz_t(), s);
    IntegerPolynomial T = taylor_shift_1(C, threshold);
    // Each truncation error is in [0, 1), so T_j underestimates by less than 2^(d+1).
    mpz_class E = mpz_class(1) << (d + 1);
    std::vector<int> signs(T.size());
    bool ok = true;
    for (size_t i = 0; i < T.size() && ok; ++i) {
      if (T[i] > 0)
        signs[i] = 1;
      else if (T[i] + E <= 0)
        signs[i] = -1;
      else
        ok = false;
    }
    if (ok) return count_changes(signs);
  }
}

void strip_two_content(IntegerPolynomial& g) {
  unsigned long v = ~0UL;
  for (const auto& c : g)
    if (c != 0) v = std::min<unsigned long>(v, mpz_scan1(c.get_mpz_t(), 0));
  if (v != 0 && v != ~0UL)
    for (auto& c : g) mpz_fdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), v);
}

DyadicInterval make_interval(mpz_class a, mpz_class b, unsigned long k) {
  while (k > 0 && mpz_even_p(a.get_mpz_t()) && mpz_even_p(b.get_mpz_t())) {
    a >>= 1;
    b >>= 1;
    --k;
  }
  return {a, b, k};
}

Dyadic make_dyadic(mpz_class a, unsigned long k) {
  while (k > 0 && mpz_even_p(a.get_mpz_t())) {
    a >>= 1;
    --k;
  }
  return {a, k};
}

// Neighbouring intervals may share an endpoint; both are halved toward their
// roots until apart. Sorts the exact roots.
void separate(const IntegerPolynomial& g, IsolationResult& res) {
  auto halve = [&](DyadicInterval& I) {
    mpz_class m = I.a + I.b;
    const int sa = sign_at(g, I.a, I.k);
    DyadicInterval J{I.a << 1, I.b << 1, I.k + 1};
    const int sm = sign_at(g, m, J.k);
    if (sm == 0) {
      res.exact_roots.push_back(make_dyadic(m, J.k));
      I = {};
      return;
    }
    if (sm == sa)
      J.a = m;
    else
      J.b = m;
    I = make_interval(J.a, J.b, J.k);
  };
  for (size_t j = 1; j < res.intervals.size(); ++j) {
    auto& A = res.intervals[j - 1];
    auto& B = res.intervals[j];
    while (A.a != A.b && B.a != B.b && compare(make_dyadic(A.b, A.k), make_dyadic(B.a, B.k)) >= 0) {
      halve(A);
      if (A.a != A.b) halve(B);
    }
  }
  std::erase_if(res.intervals, [](const DyadicInterval& I) { return I.a == I.b; });
  std::sort(res.exact_roots.begin(), res.exact_roots.end(),
            [](const Dyadic& x, const Dyadic& y) { return compare(x, y) < 0; });
}

}  // namespace

IsolationResult descartes_isolate_01(const IntegerPolynomial& f, const Config& cfg) {
  IsolationResult res;
  IntegerPolynomial f0 = f;
  trim(f0);
  if (f0.size() <= 1) return res;
  const size_t d = f0.size() - 1;
  const size_t prec0 = cfg.initial_precision ? cfg.initial_precision : 2 * d + 64;
  const size_t cap = cfg.max_depth ? cfg.max_depth : 2 * (d * (max_bits(f0) + 2 * 64) + 64);

  struct Node {
    IntegerPolynomial g;
    mpz_class c;
    unsigned long k;
  };
  std::vector<Node> stack;
  strip_two_content(f0);
  stack.push_back({f0, 0, 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.k > cap) throw Error(ErrorCode::NotSquarefree);
    const IntegerPolynomial& g = node.g;
    size_t v = node_variations(g, prec0, cfg.shift_threshold);
    if (v == 0) continue;
    mpz_class at_one = 0;
    for (const auto& c : g) at_one += c;
    // Left half: 2^d g(x / 2).
    IntegerPolynomial gl = g;
    for (size_t i = 0; i < gl.size(); ++i) gl[i] <<= (d - i);
    strip_two_content(gl);
    mpz_class mid = 0;
    for (const auto& c : gl) mid += c;
    if (mid == 0) res.exact_roots.push_back(make_dyadic(2 * node.c + 1, node.k + 1));
    if (v == 1 && (mid == 0 || (g[0] != 0 && at_one != 0))) {
      if (mid != 0) res.intervals.push_back(make_interval(node.c, node.c + 1, node.k));
      continue;
    }
    IntegerPolynomial gr = taylor_shift_1(gl, cfg.shift_threshold);
    stack.push_back({std::move(gr), 2 * node.c + 1, node.k + 1});
    stack.push_back({std::move(gl), 2 * node.c, node.k + 1});
  }
  separate(f0, res);
  return res;
}

namespace {

// Maps roots of f(2^K x) in (0, 1) to roots of f, negated when neg.
void map_back(const IsolationResult& part, long K, bool neg, IsolationResult& out) {
  auto scale = [&](mpz_class a, unsigned long k, unsigned long& kout) {
    if (k >= static_cast<unsigned long>(K)) {
      kout = k - static_cast<unsigned long>(K);
    } else {
      a <<= (static_cast<unsigned long>(K) - k);
      kout = 0;
    }
    return a;
  };
  for (const auto& I : part.intervals) {
    unsigned long k;
    mpz_class a = scale(I.a, I.k, k), b = scale(I.b, I.k, k);
    out.intervals.push_back(neg ? make_interval(-b, -a, k) : make_interval(a, b, k));
  }
  for (const auto& r : part.exact_roots) {
    unsigned long k;
    mpz_class a = scale(r.num, r.exp, k);
    out.exact_roots.push_back(make_dyadic(neg ? mpz_class(-a) : a, k));
  }
}

}  // namespace

IsolationResult isolate_real_roots(const IntegerPolynomial& f, const Config& cfg) {
  IntegerPolynomial g = f;
  trim(g);
  if (g.empty()) throw Error(ErrorCode::ZeroPolynomial);
  g = squarefree_part(g);
  IsolationResult res;
  if (g.size() > 1 && g[0] == 0) {
    res.exact_roots.push_back({0, 0});
    g.erase(g.begin());
  }
  if (g.size() <= 1) return res;
  const long K = std::min(root_bound(g), fujiwara_bound(g));
  IntegerPolynomial h = g;
  for (size_t i = 1; i < h.size(); i += 2) h[i] = -h[i];

  IsolationResult neg, pos;
  map_back(descartes_isolate_01(scale_2exp(h, K), cfg), K, true, neg);
  map_back(descartes_isolate_01(scale_2exp(g, K), cfg), K, false, pos);

  // An interval touching the removed root at 0 is shrunk away from it.
  auto detach = [&](DyadicInterval& I) {
    const bool left = I.a == 0;
    if (!left && I.b != 0) return;
    mpz_class far = left ? I.b : I.a;
    unsigned long k = I.k;
    const int sf = sign_at(g, far, k);
    for (;;) {
      far <<= 1;
      ++k;
      mpz_class m = far / 2;
      int sm = sign_at(g, m, k);
      if (sm == 0) {
        I = {};
        res.exact_roots.push_back(make_dyadic(m, k));
        return;
      }
      if (sm != sf) {
        I = left ? make_interval(m, far, k) : make_interval(far, m, k);
        return;
      }
      far = m;
    }
  };
  if (!res.exact_roots.empty()) {
    for (auto* part : {&neg, &pos}) {
      for (auto& I : part->intervals) detach(I);
      std::erase_if(part->intervals, [](const DyadicInterval& I) { return I.a == I.b; });
    }
  }

  IsolationResult out;
  out.intervals.assign(neg.intervals.rbegin(), neg.intervals.rend());
  out.intervals.insert(out.intervals.end(), pos.intervals.begin(), pos.intervals.end());
  out.exact_roots.assign(neg.exact_roots.rbegin(), neg.exact_roots.rend());
  out.exact_roots.insert(out.exact_roots.end(), res.exact_roots.begin(), res.exact_roots.end());
  out.exact_roots.insert(out.exact_roots.end(), pos.exact_roots.begin(), pos.exact_roots.end());

  separate(g, out);
  return out;
}

namespace {

bool narrow_enough(const mpz_class& a, const mpz_class& b, unsigned long k, long target) {
  // (b - a) / 2^k <= 2^target
  mpz_class w = b - a;
  long e = target + static_cast<long>(k);
  if (e < 0) return false;
  return w <= (mpz_class(1) << static_cast<unsigned long>(e));
}

// Small interval around the exact root r / 2^k, inside the current interval.
DyadicInterval around(const mpz_class& r, unsigned long k, long target) {
  unsigned long k2 = std::max<long>(static_cast<long>(k) + 1, 1 - target);
  mpz_class c = r << (k2 - k);
  return make_interval(c - 1, c + 1, k2);
}

}  // namespace

DyadicInterval refine_interval(const IntegerPolynomial& f, const DyadicInterval& I, long target_exp) {
  mpz_class a = I.a, b = I.b;
  unsigned long k = I.k;
  int sa = sign_at(f, a, k), sb = sign_at(f, b, k);
  if (sa == 0 || sb == 0 || sa == sb || a >= b) throw Error(ErrorCode::NotIsolating);
  unsigned long e = 2;  // N = 2^e subintervals for the secant guess
  const size_t d = f.size() - 1;
  auto value = [&](const mpz_class& c, unsigned long kk) {
    mpz_class acc = f[d], t;
    for (size_t i = d; i-- > 0;) {
      acc *= c;
      t = f[i];
      t <<= kk * (d - i);
      acc += t;
    }
    return acc;
  };
  while (!narrow_enough(a, b, k, target_exp)) {
    bool advanced = false;
    if (e >= 2) {
      mpz_class fa = value(a, k), fb = value(b, k);
      mpz_class t = (fa << e) / (fa - fb);  // in [0, N]
      mpz_class N = mpz_class(1) << e;
      if (t >= N) t = N - 1;
      if (t < 0) t = 0;
      mpz_class step = b - a;
      mpz_class A = a << e;
      mpz_class m1 = A + t * step, m2 = m1 + step;
      unsigned long K = k + e;
      int s1 = t == 0 ? sa : sign_at(f, m1, K);
      int s2 = t + 1 == N ? sb : sign_at(f, m2, K);
      if (s1 == 0) return around(m1, K, target_exp);
      if (s2 == 0) return around(m2, K, target_exp);
      if (s1 != s2) {
        DyadicInterval J = make_interval(m1, m2, K);
        a = J.a;
        b = J.b;
        k = J.k;
        sa = s1;
        sb = s2;
        e *= 2;
        advanced = true;
      } else {
        e /= 2;
      }
    }
    if (!advanced) {
      mpz_class m = a + b;
      a <<= 1;
      b <<= 1;
      ++k;
      int sm = sign_at(f, m, k);
      if (sm == 0) return around(m, k, target_exp);
      if (sm == sa)
        a = m;
      else
        b = m;
      DyadicInterval J = make_interval(a, b, k);
      a = J.a;
      b = J.b;
      k = J.k;
      if (e < 2) e = 2;
    }
  }
  return make_interval(a, b, k);
}

}  // namespace zds::usolve
