#include <algorithm>

#include "zdsolve/f4.hpp"

namespace zds::f4 {

namespace {

// lcm(a, b) == l, without interning.
bool lcm_equals(const MonomialTable& t, MonomialId a, MonomialId b, MonomialId l) {
  const Exponent* ea = t.exps(a);
  const Exponent* eb = t.exps(b);
  const Exponent* el = t.exps(l);
  for (size_t v = 0; v < t.nvars(); ++v)
    if (std::max(ea[v], eb[v]) != el[v]) return false;
  return true;
}

}  // namespace

void update_pairs(std::vector<SPair>& pairs, std::vector<BasisEntry>& basis, size_t h, MonomialTable& t) {
  const MonomialId H = basis[h].poly.lead();

  struct Cand {
    int32_t g;
    MonomialId lcm;
    bool coprime;
    uint8_t state;  // 0 pending, 1 kept, 2 dropped
  };
  std::vector<Cand> cands;
  for (size_t g = 0; g < h; ++g) {
    if (basis[g].redundant) continue;
    MonomialId G = basis[g].poly.lead();
    cands.push_back({static_cast<int32_t>(g), t.lcm(H, G), t.coprime(H, G), 0});
  }

  for (size_t k = 0; k < cands.size(); ++k) {
    Cand& c = cands[k];
    if (c.coprime) {
      c.state = 1;
      continue;
    }
    bool drop = false;
    for (size_t o = 0; o < cands.size() && !drop; ++o) {
      if (o == k || cands[o].state == 2) continue;
      drop = t.divides(cands[o].lcm, c.lcm);
    }
    c.state = drop ? 2 : 1;
  }

  std::erase_if(pairs, [&](const SPair& p) {
    if (p.j < 0) return false;
    if (!t.divides(H, p.lcm)) return false;
    MonomialId li = basis[p.i].poly.lead();
    MonomialId lj = basis[p.j].poly.lead();
    return !lcm_equals(t, H, li, p.lcm) && !lcm_equals(t, H, lj, p.lcm);
  });

  for (const Cand& c : cands)
    if (c.state == 1 && !c.coprime)
      pairs.push_back({c.g, static_cast<int32_t>(h), c.lcm, t.degree(c.lcm)});

  for (size_t g = 0; g < h; ++g)
    if (!basis[g].redundant && t.divides(H, basis[g].poly.lead())) basis[g].redundant = true;
}

std::vector<SPair> select_pairs(std::vector<SPair>& pairs) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyPairSet);
  uint32_t d = pairs[0].degree;
  for (const SPair& p : pairs) d = std::min(d, p.degree);
  std::vector<SPair> L, rest;
  for (const SPair& p : pairs) (p.degree == d ? L : rest).push_back(p);
  pairs = std::move(rest);
  return L;
}

}  // namespace zds::f4
