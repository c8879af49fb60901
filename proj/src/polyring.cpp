#include "zdsolve/polyring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

namespace zds {

uint32_t ExponentVector::degree() const {
  uint32_t d = 0;
  for (Exponent x : e) d += x;
  return d;
}

int compare_raw(const Exponent* a, const Exponent* b, size_t n, Order order) {
  if (order == Order::LEX) {
    for (size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  uint32_t da = 0, db = 0;
  for (size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Cmp compare_monomials(const ExponentVector& a, const ExponentVector& b, Order order) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch);
  return static_cast<Cmp>(compare_raw(a.e.data(), b.e.data(), a.size(), order));
}

MonomialTable::MonomialTable(size_t nvars, size_t initial_slots)
    : n_(nvars), thresholds_(std::min<size_t>(nvars, 32), 0), scratch_(nvars) {
  std::mt19937_64 rng(0x5eed1234abcdULL);
  weights_.resize(n_);
  for (auto& w : weights_) w = rng() | 1;
  size_t s = 16;
  while (s < initial_slots) s <<= 1;
  slots_.assign(s, 0);
  shift_ = 64 - static_cast<unsigned>(std::countr_zero(s));
  std::vector<Exponent> zero(n_, 0);
  intern(zero.data());
}

ExponentVector MonomialTable::exponents(MonomialId id) const {
  ExponentVector v(n_);
  std::copy_n(exps(id), n_, v.e.begin());
  return v;
}

uint32_t MonomialTable::compute_mask(const Exponent* e) const {
  uint32_t m = 0;
  for (size_t i = 0; i < thresholds_.size(); ++i)
    if (e[i] > thresholds_[i]) m |= 1u << i;
  return m;
}

MonomialId MonomialTable::insert_hashed(const Exponent* e, uint64_t h) {
  const size_t mask = slots_.size() - 1;
  size_t s = slot_of(h);
  while (true) {
    uint32_t v = slots_[s];
    if (v == 0) break;
    MonomialId id = v - 1;
    if (hash_[id] == h && std::equal(e, e + n_, exps(id))) return id;
    s = (s + 1) & mask;
  }
  MonomialId id = static_cast<MonomialId>(deg_.size());
  exps_.insert(exps_.end(), e, e + n_);
  uint32_t d = 0;
  for (size_t i = 0; i < n_; ++i) d += e[i];
  deg_.push_back(d);
  hash_.push_back(h);
  mask_.push_back(compute_mask(e));
  slots_[s] = id + 1;
  if (2 * deg_.size() > slots_.size()) rehash(slots_.size() * 2);
  return id;
}

MonomialId MonomialTable::intern(const Exponent* e) {
  uint64_t h = 0;
  for (size_t i = 0; i < n_; ++i) h += weights_[i] * e[i];
  return insert_hashed(e, h);
}

MonomialId MonomialTable::intern(const ExponentVector& e) {
  if (e.size() != n_) throw Error(ErrorCode::DimensionMismatch);
  return intern(e.e.data());
}

void MonomialTable::rehash(size_t new_slots) {
  // Median exponent per masked variable.
  const size_t cnt = deg_.size();
  for (size_t i = 0; i < thresholds_.size(); ++i) {
    std::vector<uint32_t> hist;
    for (size_t id = 0; id < cnt; ++id) {
      Exponent x = exps_[id * n_ + i];
      if (x >= hist.size()) hist.resize(size_t{x} + 1, 0);
      ++hist[x];
    }
    size_t acc = 0;
    Exponent t = 0;
    for (size_t x = 0; x < hist.size(); ++x) {
      acc += hist[x];
      if (2 * acc >= cnt) {
        t = static_cast<Exponent>(x);
        break;
      }
    }
    thresholds_[i] = t;
  }
  for (size_t id = 0; id < cnt; ++id) mask_[id] = compute_mask(exps(static_cast<MonomialId>(id)));

  slots_.assign(new_slots, 0);
  shift_ = 64 - static_cast<unsigned>(std::countr_zero(new_slots));
  const size_t mask = new_slots - 1;
  for (size_t id = 0; id < cnt; ++id) {
    size_t s = slot_of(hash_[id]);
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = static_cast<uint32_t>(id + 1);
  }
}

MonomialId MonomialTable::mul(MonomialId a, MonomialId b) {
  const Exponent* ea = exps(a);
  const Exponent* eb = exps(b);
  for (size_t i = 0; i < n_; ++i) {
    uint32_t s = uint32_t{ea[i]} + eb[i];
    if (s > 0xFFFF) throw Error(ErrorCode::ExponentOverflow);
    scratch_[i] = static_cast<Exponent>(s);
  }
  return insert_hashed(scratch_.data(), hash_[a] + hash_[b]);
}

MonomialId MonomialTable::lcm(MonomialId a, MonomialId b) {
  const Exponent* ea = exps(a);
  const Exponent* eb = exps(b);
  for (size_t i = 0; i < n_; ++i) scratch_[i] = std::max(ea[i], eb[i]);
  return intern(scratch_.data());
}

MonomialId MonomialTable::quotient(MonomialId b, MonomialId a) {
  const Exponent* ea = exps(a);
  const Exponent* eb = exps(b);
  for (size_t i = 0; i < n_; ++i) {
    if (ea[i] > eb[i]) throw Error(ErrorCode::ExponentOverflow, "quotient of non-divisible monomials");
    scratch_[i] = static_cast<Exponent>(eb[i] - ea[i]);
  }
  return insert_hashed(scratch_.data(), hash_[b] - hash_[a]);
}

bool MonomialTable::divides_exact(MonomialId a, MonomialId b) const {
  const Exponent* ea = exps(a);
  const Exponent* eb = exps(b);
  for (size_t i = 0; i < n_; ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

bool MonomialTable::coprime(MonomialId a, MonomialId b) const {
  const Exponent* ea = exps(a);
  const Exponent* eb = exps(b);
  for (size_t i = 0; i < n_; ++i)
    if (ea[i] && eb[i]) return false;
  return true;
}

void normalize(SparsePolynomial& f, const MonomialTable& t, const Modulus& m) {
  std::vector<size_t> idx(f.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return t.cmp(f.mons[a], f.mons[b]) > 0; });
  SparsePolynomial out;
  for (size_t k : idx) {
    if (!out.empty() && out.mons.back() == f.mons[k]) {
      out.coeffs.back() = m.add(out.coeffs.back(), f.coeffs[k]);
      if (out.coeffs.back() == 0) {
        out.mons.pop_back();
        out.coeffs.pop_back();
      }
    } else if (f.coeffs[k] != 0) {
      out.mons.push_back(f.mons[k]);
      out.coeffs.push_back(f.coeffs[k]);
    }
  }
  f = std::move(out);
}

void make_monic(SparsePolynomial& f, const Modulus& m) {
  if (f.empty() || f.coeffs[0] == 1) return;
  Residue c = m.inv(f.coeffs[0]);
  for (auto& x : f.coeffs) x = m.mul(x, c);
}

void canonicalize(ZPolynomial& f) {
  std::sort(f.terms.begin(), f.terms.end(), [](const ZTerm& a, const ZTerm& b) {
    return compare_raw(a.exp.e.data(), b.exp.e.data(), a.exp.size(), Order::DRL) > 0;
  });
  std::vector<ZTerm> out;
  for (auto& t : f.terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  f.terms = std::move(out);
}

uint32_t total_degree(const ZPolynomial& f) {
  uint32_t d = 0;
  for (const auto& t : f.terms) d = std::max(d, t.exp.degree());
  return d;
}

SparsePolynomial reduce_mod(const ZPolynomial& f, MonomialTable& t, const Modulus& m) {
  SparsePolynomial out;
  mpz_class r;
  for (const auto& term : f.terms) {
    r = term.coeff % m.p();
    if (r < 0) r += m.p();
    Residue c = static_cast<Residue>(r.get_ui());
    if (c == 0) continue;
    out.mons.push_back(t.intern(term.exp));
    out.coeffs.push_back(c);
  }
  normalize(out, t, m);
  return out;
}

namespace {

using TermMap = std::map<std::vector<Exponent>, mpz_class>;

TermMap multiply(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<Exponent> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) {
        uint32_t s = uint32_t{ea[i]} + eb[i];
        if (s > 0xFFFF) throw Error(ErrorCode::ExponentOverflow);
        e[i] = static_cast<Exponent>(s);
      }
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

ZPolynomial substitute_last(const ZPolynomial& f, const std::vector<long>& c) {
  if (f.is_zero()) return f;
  const size_t n = f.terms[0].exp.size();
  if (n == 0) return f;
  const size_t last = n - 1;
  TermMap lin;
  {
    std::vector<Exponent> e(n, 0);
    e[last] = 1;
    lin[e] = 1;
    for (size_t i = 0; i < last && i < c.size(); ++i) {
      if (c[i] == 0) continue;
      std::fill(e.begin(), e.end(), 0);
      e[i] = 1;
      lin[e] = -c[i];
    }
  }
  uint32_t maxk = 0;
  for (const auto& t : f.terms) maxk = std::max<uint32_t>(maxk, t.exp.e[last]);
  std::vector<TermMap> powers{TermMap{{std::vector<Exponent>(n, 0), mpz_class(1)}}};
  for (uint32_t k = 1; k <= maxk; ++k) powers.push_back(multiply(powers.back(), lin));

  TermMap acc;
  for (const auto& t : f.terms) {
    std::vector<Exponent> base = t.exp.e;
    const uint32_t k = base[last];
    base[last] = 0;
    for (const auto& [e, coeff] : powers[k]) {
      std::vector<Exponent> s(n);
      for (size_t i = 0; i < n; ++i) s[i] = static_cast<Exponent>(base[i] + e[i]);
      acc[s] += t.coeff * coeff;
    }
  }
  ZPolynomial out;
  for (auto& [e, coeff] : acc)
    if (coeff != 0) out.terms.push_back({ExponentVector{}, coeff}), out.terms.back().exp.e = e;
  canonicalize(out);
  return out;
}

}  // namespace zds
