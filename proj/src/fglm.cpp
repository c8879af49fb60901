#include "zdsolve/fglm.hpp"

#include <algorithm>
#include <deque>

#include "zdsolve/kernels.hpp"

namespace zds::fglm {

QuotientBasis quotient_basis(const f4::GroebnerBasis& G) {
  MonomialTable& t = *G.table;
  const size_t n = t.nvars();
  const std::vector<MonomialId> leads = G.leads();
  for (size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (MonomialId l : leads) {
      const Exponent* e = t.exps(l);
      bool only = e[v] > 0;
      for (size_t u = 0; u < n && only; ++u)
        if (u != v && e[u]) only = false;
      pure = pure || only || t.degree(l) == 0;
    }
    if (!pure) throw Error(ErrorCode::PositiveDimension);
  }
  auto standard = [&](MonomialId m) {
    for (MonomialId l : leads)
      if (t.divides(l, m)) return false;
    return true;
  };
  QuotientBasis B;
  if (!standard(t.one())) return B;
  std::vector<MonomialId> found{t.one()};
  std::unordered_map<MonomialId, uint32_t> seen{{t.one(), 0}};
  std::deque<MonomialId> queue{t.one()};
  std::vector<Exponent> unit(n, 0);
  std::vector<MonomialId> vars(n);
  for (size_t v = 0; v < n; ++v) {
    unit.assign(n, 0);
    unit[v] = 1;
    vars[v] = t.intern(unit.data());
  }
  while (!queue.empty()) {
    MonomialId mo = queue.front();
    queue.pop_front();
    for (size_t v = 0; v < n; ++v) {
      MonomialId x = t.mul(mo, vars[v]);
      if (seen.count(x) || !standard(x)) continue;
      seen.emplace(x, 0);
      found.push_back(x);
      queue.push_back(x);
    }
  }
  std::sort(found.begin(), found.end(), [&](MonomialId a, MonomialId b) { return t.cmp(a, b) < 0; });
  B.monomials = found;
  for (size_t i = 0; i < found.size(); ++i) B.index.emplace(found[i], static_cast<uint32_t>(i));
  return B;
}

MultiplicationMatrix build_multiplication_matrix(const f4::GroebnerBasis& G, const QuotientBasis& B, size_t var) {
  MonomialTable& t = *G.table;
  const Modulus& m = G.modulus;
  const size_t D = B.size();
  std::vector<Exponent> unit(t.nvars(), 0);
  unit[var] = 1;
  const MonomialId x = t.intern(unit.data());
  std::unordered_map<MonomialId, size_t> lead_of;
  for (size_t j = 0; j < G.elements.size(); ++j) lead_of.emplace(G.elements[j].lead(), j);

  MultiplicationMatrix M;
  M.dim = D;
  M.trivial_source.assign(D, -1);
  for (size_t r = 0; r < D; ++r) {
    MonomialId y = t.mul(B.monomials[r], x);
    long j = B.find(y);
    if (j >= 0) {
      M.trivial_source[r] = static_cast<int32_t>(j);
      continue;
    }
    auto it = lead_of.find(y);
    if (it == lead_of.end()) throw Error(ErrorCode::StaircaseNotGeneric);
    const SparsePolynomial& g = G.elements[it->second];
    M.dense_rows.push_back(static_cast<uint32_t>(r));
    const size_t off = M.dense.size();
    M.dense.resize(off + D, 0);
    for (size_t k = 1; k < g.size(); ++k) {
      long c = B.find(g.mons[k]);
      if (c < 0) throw Error(ErrorCode::StaircaseNotGeneric, "basis not reduced");
      M.dense[off + static_cast<size_t>(c)] = m.neg(g.coeffs[k]);
    }
  }
  return M;
}

KrylovTable krylov_sequence(const MultiplicationMatrix& M, const std::vector<Residue>& V0, size_t count,
                            const std::vector<std::vector<Residue>>& probes, const Modulus& m) {
  if (V0.size() != M.dim) throw Error(ErrorCode::LengthMismatch);
  for (const auto& q : probes)
    if (q.size() != M.dim) throw Error(ErrorCode::LengthMismatch);
  KrylovTable T;
  T.streams.assign(probes.size(), std::vector<Residue>(count, 0));
  std::vector<Residue> V = V0, W(M.dim);
  const uint64_t p2 = m.p2();
  for (size_t k = 0; k < count; ++k) {
    for (size_t j = 0; j < probes.size(); ++j)
      T.streams[j][k] = m.reduce(kernels::dot_lanes(V.data(), probes[j].data(), M.dim, p2));
    if (k + 1 == count) break;
    for (size_t r = 0; r < M.dim; ++r)
      if (M.trivial_source[r] >= 0) W[r] = V[static_cast<size_t>(M.trivial_source[r])];
    for (size_t d = 0; d < M.dense_rows.size(); ++d)
      W[M.dense_rows[d]] = m.reduce(kernels::dot_lanes(M.dense_row(d), V.data(), M.dim, p2));
    T.ops += M.ops_per_step();
    std::swap(V, W);
  }
  return T;
}

UPoly berlekamp_massey(const std::vector<Residue>& s, const Modulus& m) {
  // Connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L.
  UPoly C{1}, B{1};
  size_t L = 0, shift = 1;
  Residue b = 1;
  for (size_t k = 0; k < s.size(); ++k) {
    Residue d = s[k];
    for (size_t i = 1; i <= L && i < C.size(); ++i) d = m.add(d, m.mul(C[i], s[k - i]));
    if (d == 0) {
      ++shift;
      continue;
    }
    const Residue coef = m.mul(d, m.inv(b));
    UPoly T = C;
    if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
    for (size_t i = 0; i < B.size(); ++i) C[i + shift] = m.sub(C[i + shift], m.mul(coef, B[i]));
    if (2 * L <= k) {
      L = k + 1 - L;
      B = std::move(T);
      b = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  C.resize(L + 1, 0);
  // Annihilator x^L C(1/x), monic since C_0 = 1.
  UPoly r(C.rbegin(), C.rend());
  return r;
}

UPoly squarefree_part(const UPoly& g, const Modulus& m) {
  if (g.empty()) throw Error(ErrorCode::ZeroPolynomial);
  if (static_cast<uint64_t>(m.p()) <= static_cast<uint64_t>(up::degree(g)))
    throw Error(ErrorCode::CharacteristicTooSmall);
  UPoly h = up::gcd(g, up::derivative(g, m), m);
  return up::monic(up::quo(g, h, m), m);
}

namespace {

// (g * sum_{k<d} s_k x^{d-1-k}) quo x^d
UPoly numerator(const UPoly& g, const std::vector<Residue>& s, size_t d, const Modulus& m) {
  UPoly S(d, 0);
  for (size_t k = 0; k < d && k < s.size(); ++k) S[d - 1 - k] = s[k];
  up::trim(S);
  return up::shift_down(up::mul(g, S, m), d);
}

// P with P = N_t / N_s mod w.
UPoly hankel_solution(const UPoly& g, const UPoly& w, const std::vector<Residue>& s, const std::vector<Residue>& t,
                      const Modulus& m) {
  const size_t d = static_cast<size_t>(up::degree(g));
  UPoly h = numerator(g, s, d, m);
  UPoly nt = numerator(g, t, d, m);
  UPoly hinv;
  try {
    hinv = up::inverse_mod(h, w, m);
  } catch (const Error&) {
    throw Error(ErrorCode::UnluckyVector);
  }
  return up::rem(up::mul(up::rem(nt, w, m), hinv, m), w, m);
}

}  // namespace

UPoly solve_hankel(const std::vector<Residue>& seq, const std::vector<Residue>& rhs, const Modulus& m) {
  const size_t D = rhs.size();
  if (seq.size() < 2 * D) throw Error(ErrorCode::LengthMismatch);
  std::vector<Residue> s(seq.begin(), seq.begin() + static_cast<long>(2 * D));
  UPoly g = berlekamp_massey(s, m);
  if (static_cast<size_t>(up::degree(g)) != D) throw Error(ErrorCode::UnluckyVector);
  return hankel_solution(g, g, seq, rhs, m);
}

UPoly param_nonshape(const UPoly& g, const UPoly& w, const std::vector<Residue>& s, const std::vector<Residue>& t,
                     const Modulus& m) {
  return up::neg(hankel_solution(g, w, s, t, m), m);
}

bool verify_parametrization(const UPoly& w, const UPoly& v, const std::vector<Residue>& s,
                            const std::vector<Residue>& t, const std::vector<Residue>& t2, Residue lambda,
                            const Modulus& m) {
  const size_t len = std::min({s.size(), t.size(), t2.size()});
  std::vector<Residue> s2(len), u2(len);
  for (size_t k = 0; k < len; ++k) {
    s2[k] = m.add(t[k], m.mul(lambda, s[k]));
    u2[k] = m.add(t2[k], m.mul(lambda, t[k]));
  }
  UPoly g2 = berlekamp_massey(s2, m);
  if (up::degree(g2) < 1) return false;
  try {
    if (squarefree_part(g2, m) != w) return false;
    return param_nonshape(g2, w, s2, u2, m) == v;
  } catch (const Error&) {
    return false;
  }
}

namespace {

std::vector<Residue> dense_coords(const SparsePolynomial& f, const QuotientBasis& B) {
  std::vector<Residue> v(B.size(), 0);
  for (size_t k = 0; k < f.size(); ++k) {
    long c = B.find(f.mons[k]);
    if (c >= 0) v[static_cast<size_t>(c)] = f.coeffs[k];
  }
  return v;
}

SparsePolynomial power_of_var(MonomialTable& t, size_t v, Exponent e) {
  std::vector<Exponent> ex(t.nvars(), 0);
  ex[v] = e;
  return SparsePolynomial{{t.intern(ex.data())}, {1}};
}

}  // namespace

RationalParametrization sparse_fglm(const f4::GroebnerBasis& G, std::mt19937_64& rng, const Config& cfg) {
  const Modulus& m = G.modulus;
  MonomialTable& t = *G.table;
  const size_t n = t.nvars();
  RationalParametrization R;
  R.n = n;
  R.prime = m.p();
  QuotientBasis B = quotient_basis(G);
  const size_t D = B.size();
  R.dimension = D;
  R.v.assign(n - 1, {});
  if (D == 0) {
    R.g = R.w = UPoly{1};
    R.shape = R.verified = true;
    return R;
  }
  MultiplicationMatrix M = build_multiplication_matrix(G, B);

  std::vector<std::vector<Residue>> probes;
  probes.push_back(std::vector<Residue>(D, 0));
  probes[0][0] = 1;
  for (size_t i = 0; i + 1 < n; ++i) {
    probes.push_back(dense_coords(f4::normal_form(power_of_var(t, i, 1), G), B));
    probes.push_back(dense_coords(f4::normal_form(power_of_var(t, i, 2), G), B));
  }

  std::uniform_int_distribution<uint32_t> coef(0, m.p() - 1);
  std::uniform_int_distribution<uint32_t> nonzero(1, m.p() - 1);
  for (uint32_t attempt = 0;; ++attempt) {
    std::vector<Residue> V0(D);
    for (auto& x : V0) x = coef(rng);
    KrylovTable K = krylov_sequence(M, V0, 2 * D, probes, m);
    R.krylov_ops += K.ops;
    const auto& s = K.streams[0];
    try {
      UPoly g = berlekamp_massey(s, m);
      if (up::degree(g) < 1) throw Error(ErrorCode::UnluckyVector);
      R.shape = static_cast<size_t>(up::degree(g)) == D;
      UPoly w = squarefree_part(g, m);
      std::vector<UPoly> v(n - 1);
      for (size_t i = 0; i + 1 < n; ++i) {
        const auto& t = K.streams[1 + 2 * i];
        if (R.shape)
          // Hankel system with the precomputed annihilator, v = -P.
          v[i] = up::rem(up::neg(hankel_solution(g, g, s, t, m), m), w, m);
        else
          v[i] = param_nonshape(g, w, s, t, m);
      }
      R.g = g;
      R.w = w;
      R.v = v;

      VerifyPolicy policy = R.shape ? cfg.shape_policy : cfg.nonshape_policy;
      std::vector<size_t> check;
      if (n > 1 && policy == VerifyPolicy::All)
        for (size_t i = 0; i + 1 < n; ++i) check.push_back(i);
      if (n > 1 && policy == VerifyPolicy::OneRandom) check.push_back(rng() % (n - 1));
      R.verified = true;
      for (size_t i : check) {
        bool ok = false;
        for (uint32_t r = 0; r <= cfg.lambda_retries && !ok; ++r)
          ok = verify_parametrization(w, v[i], s, K.streams[1 + 2 * i], K.streams[2 + 2 * i], nonzero(rng), m);
        if (!ok) {
          R.verified = false;
          break;
        }
      }
      return R;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnluckyVector || attempt >= cfg.vector_retries) throw;
    }
  }
}

}  // namespace zds::fglm
