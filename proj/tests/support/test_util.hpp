#pragma once

#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "buchberger_oracle.hpp"
#include "zdsolve/f4.hpp"
#include "zdsolve/polyring.hpp"

namespace tu {

using Term = std::pair<long, std::vector<int>>;

inline zds::SparsePolynomial poly(zds::MonomialTable& t, const zds::Modulus& m, const std::vector<Term>& terms) {
  zds::SparsePolynomial f;
  for (const auto& [c, e] : terms) {
    zds::ExponentVector ev(e.size());
    for (size_t i = 0; i < e.size(); ++i) ev.e[i] = static_cast<zds::Exponent>(e[i]);
    f.mons.push_back(t.intern(ev));
    f.coeffs.push_back(m.reduce_signed(c));
  }
  zds::normalize(f, t, m);
  return f;
}

inline oracle::Poly to_oracle(const zds::SparsePolynomial& f, const zds::MonomialTable& t) {
  oracle::Poly r;
  for (size_t k = 0; k < f.size(); ++k) {
    auto e = t.exponents(f.mons[k]);
    r[oracle::Mono(e.e.begin(), e.e.end())] = f.coeffs[k];
  }
  return r;
}

inline std::vector<oracle::Poly> to_oracle(const zds::f4::GroebnerBasis& G) {
  std::vector<oracle::Poly> out;
  for (const auto& g : G.elements) out.push_back(to_oracle(g, *G.table));
  return out;
}

inline zds::SparsePolynomial from_oracle(const oracle::Poly& f, zds::MonomialTable& t, const zds::Modulus& m) {
  zds::SparsePolynomial r;
  for (const auto& [mo, co] : f) {
    zds::ExponentVector ev(mo.size());
    for (size_t i = 0; i < mo.size(); ++i) ev.e[i] = static_cast<zds::Exponent>(mo[i]);
    r.mons.push_back(t.intern(ev));
    r.coeffs.push_back(co);
  }
  zds::normalize(r, t, m);
  return r;
}

// Dense-ish random system: n vars, total degree <= d.
inline std::vector<oracle::Poly> random_system(std::mt19937_64& rng, size_t n, int d, size_t ngens, size_t nterms,
                                               const zds::Modulus& m) {
  std::vector<oracle::Poly> F;
  for (size_t g = 0; g < ngens; ++g) {
    oracle::Poly f;
    for (size_t k = 0; k < nterms; ++k) {
      oracle::Mono e(n, 0);
      int budget = static_cast<int>(rng() % (d + 1));
      for (int s = 0; s < budget; ++s) ++e[rng() % n];
      uint32_t c = static_cast<uint32_t>(rng() % m.p());
      if (c) f[e] = m.add(f.count(e) ? f[e] : 0, c);
    }
    for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
    if (!f.empty()) F.push_back(f);
  }
  return F;
}

}  // namespace tu
