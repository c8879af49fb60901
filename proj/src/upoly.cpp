#include "zdsolve/upoly.hpp"

#include <algorithm>

namespace zds::up {

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly add(const UPoly& a, const UPoly& b, const Modulus& m) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = m.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b, const Modulus& m) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = m.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly neg(const UPoly& a, const Modulus& m) {
  UPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = m.neg(a[i]);
  return r;
}

UPoly scale(const UPoly& a, Residue c, const Modulus& m) {
  if (c == 0) return {};
  UPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = m.mul(a[i], c);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b, const Modulus& m) {
  if (a.empty() || b.empty()) return {};
  // Column sums with the same delayed correction as the dot kernel.
  const int64_t p2 = static_cast<int64_t>(m.p2());
  std::vector<int64_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) {
      int64_t x = acc[i + j] + static_cast<int64_t>(ai * b[j]) - p2;
      x += (x >> 63) & p2;
      acc[i + j] = x;
    }
  }
  UPoly r(acc.size());
  for (size_t k = 0; k < acc.size(); ++k) r[k] = m.reduce(static_cast<uint64_t>(acc[k]));
  trim(r);
  return r;
}

void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, const Modulus& m) {
  if (b.empty()) throw Error(ErrorCode::NotInvertible);
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  const Residue inv = m.inv(b.back());
  for (size_t k = r.size(); k-- >= b.size();) {
    Residue c = m.mul(r[k], inv);
    const size_t s = k + 1 - b.size();
    q[s] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[s + j] = m.sub(r[s + j], m.mul(c, b[j]));
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
}

UPoly rem(const UPoly& a, const UPoly& b, const Modulus& m) {
  UPoly q, r;
  divrem(a, b, q, r, m);
  return r;
}

UPoly quo(const UPoly& a, const UPoly& b, const Modulus& m) {
  UPoly q, r;
  divrem(a, b, q, r, m);
  return q;
}

UPoly monic(const UPoly& a, const Modulus& m) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, m.inv(a.back()), m);
}

UPoly derivative(const UPoly& a, const Modulus& m) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = m.mul(a[i], m.reduce(i));
  trim(r);
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b, const Modulus& m) {
  UPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    UPoly r = rem(x, y, m);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, m);
}

UPoly inverse_mod(const UPoly& a, const UPoly& f, const Modulus& m) {
  UPoly r0 = f, r1 = rem(a, f, m);
  UPoly t0, t1{1};
  while (!r1.empty()) {
    UPoly q, r;
    divrem(r0, r1, q, r, m);
    UPoly t2 = sub(t0, mul(q, t1, m), m);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error(ErrorCode::NotInvertible);
  return rem(scale(t0, m.inv(r0[0]), m), f, m);
}

Residue eval(const UPoly& f, Residue x, const Modulus& m) {
  Residue r = 0;
  for (size_t i = f.size(); i-- > 0;) r = m.add(m.mul(r, x), f[i]);
  return r;
}

UPoly shift_down(const UPoly& f, size_t k) {
  if (f.size() <= k) return {};
  return UPoly(f.begin() + static_cast<long>(k), f.end());
}

}  // namespace zds::up
