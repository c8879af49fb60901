#include <map>
#include <random>

#include "backsub.hpp"
#include "doctest.h"
#include "test_util.hpp"
#include "zdsolve/benchmarks.hpp"
#include "zdsolve/fglm.hpp"

using namespace zds;
using namespace zds::fglm;

namespace {

std::shared_ptr<MonomialTable> table(size_t n) { return std::make_shared<MonomialTable>(n); }

f4::GroebnerBasis gb(size_t n, const Modulus& m, const std::vector<std::vector<tu::Term>>& polys) {
  auto t = table(n);
  std::vector<SparsePolynomial> F;
  for (const auto& p : polys) F.push_back(tu::poly(*t, m, p));
  return f4::f4(F, t, m).basis;
}

f4::GroebnerBasis gb(const std::vector<ZPolynomial>& sys, size_t n, const Modulus& m) {
  auto t = table(n);
  std::vector<SparsePolynomial> F;
  for (const auto& f : sys) F.push_back(reduce_mod(f, *t, m));
  return f4::f4(F, t, m).basis;
}

// Dense n x n matrix with rows r: x * b_r = sum_j A[r][j] b_j.
std::vector<std::vector<Residue>> to_dense(const MultiplicationMatrix& M) {
  std::vector<std::vector<Residue>> A(M.dim, std::vector<Residue>(M.dim, 0));
  for (size_t r = 0; r < M.dim; ++r)
    if (M.trivial_source[r] >= 0) A[r][static_cast<size_t>(M.trivial_source[r])] = 1;
  for (size_t d = 0; d < M.dense_rows.size(); ++d)
    for (size_t j = 0; j < M.dim; ++j) A[M.dense_rows[d]][j] = M.dense_row(d)[j];
  return A;
}

Residue det(std::vector<std::vector<Residue>> A, const Modulus& m) {
  const size_t n = A.size();
  Residue d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      d = m.neg(d);
    }
    d = m.mul(d, A[c][c]);
    Residue inv = m.inv(A[c][c]);
    for (size_t i = c + 1; i < n; ++i) {
      Residue f = m.mul(A[i][c], inv);
      for (size_t k = c; k < n; ++k) A[i][k] = m.sub(A[i][k], m.mul(f, A[c][k]));
    }
  }
  return d;
}

// Characteristic polynomial by evaluation at n+1 points and Lagrange interpolation.
up::UPoly charpoly(const std::vector<std::vector<Residue>>& A, const Modulus& m) {
  const size_t n = A.size();
  up::UPoly res;
  for (size_t i = 0; i <= n; ++i) {
    auto B = A;
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) B[r][c] = m.sub(r == c ? static_cast<Residue>(i) : 0, A[r][c]);
    Residue yi = det(B, m);
    up::UPoly basis{1};
    Residue denom = 1;
    for (size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = up::mul(basis, up::UPoly{m.neg(static_cast<Residue>(j)), 1}, m);
      denom = m.mul(denom, m.sub(static_cast<Residue>(i), static_cast<Residue>(j)));
    }
    res = up::add(res, up::scale(basis, m.mul(yi, m.inv(denom)), m), m);
  }
  return res;
}

}  // namespace

TEST_CASE("quotient basis examples") {
  Modulus m(7);
  auto G1 = gb(2, m, {{{1, {1, 0}}}, {{1, {0, 2}}}});
  auto B1 = quotient_basis(G1);
  REQUIRE(B1.size() == 2);
  CHECK(G1.table->exponents(B1.monomials[0]) == ExponentVector{0, 0});
  CHECK(G1.table->exponents(B1.monomials[1]) == ExponentVector{0, 1});

  auto G2 = gb(2, m, {{{1, {2, 0}}}, {{1, {1, 1}}}, {{1, {0, 2}}}});
  auto B2 = quotient_basis(G2);
  REQUIRE(B2.size() == 3);
  CHECK(G2.table->exponents(B2.monomials[1]) == ExponentVector{0, 1});
  CHECK(G2.table->exponents(B2.monomials[2]) == ExponentVector{1, 0});

  auto G3 = gb(2, m, {{{1, {1, 1}}}});
  CHECK_THROWS_AS(quotient_basis(G3), Error);
  try {
    quotient_basis(G3);
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "positive dimension");
  }

  Modulus p(1073741827u);
  CHECK(quotient_basis(gb(bench::katsura(6).polys, 6, p)).size() == 32);
}

TEST_CASE("multiplication matrix of a companion example") {
  Modulus m(7);
  auto G = gb(2, m, {{{1, {1, 0}}, {-1, {0, 1}}}, {{1, {0, 2}}, {-2, {0, 0}}}});
  auto B = quotient_basis(G);
  auto M = build_multiplication_matrix(G, B);
  REQUIRE(M.dim == 2);
  CHECK(M.trivial_source[0] == 1);
  REQUIRE(M.dense_rows.size() == 1);
  CHECK(M.dense_rows[0] == 1);
  CHECK(M.dense_row(0)[0] == 2);
  CHECK(M.dense_row(0)[1] == 0);
  CHECK(M.ops_per_step() == 2 + 1);
}

TEST_CASE("multiplication matrix agrees with normal forms on katsura-6") {
  Modulus m(1073741827u);
  auto G = gb(bench::katsura(6).polys, 6, m);
  auto B = quotient_basis(G);
  auto M = build_multiplication_matrix(G, B);
  CHECK(!M.dense_rows.empty());  // a permutation of B is impossible with 1 in B
  auto A = to_dense(M);
  MonomialTable& t = *G.table;
  MonomialId xn = t.intern(ExponentVector{0, 0, 0, 0, 0, 1});
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Residue> c(B.size());
    for (auto& x : c) x = static_cast<Residue>(rng() % m.p());
    SparsePolynomial q;
    for (size_t r = 0; r < B.size(); ++r)
      if (c[r]) {
        q.mons.push_back(t.mul(B.monomials[r], xn));
        q.coeffs.push_back(c[r]);
      }
    normalize(q, t, m);
    auto nf = f4::normal_form(q, G);
    std::vector<Residue> expect(B.size(), 0);
    for (size_t k = 0; k < nf.size(); ++k) expect[static_cast<size_t>(B.find(nf.mons[k]))] = nf.coeffs[k];
    std::vector<Residue> got(B.size(), 0);
    for (size_t r = 0; r < B.size(); ++r)
      for (size_t j = 0; j < B.size(); ++j) got[j] = m.add(got[j], m.mul(c[r], A[r][j]));
    REQUIRE(got == expect);
  }
}

TEST_CASE("staircase not generic is reported") {
  Modulus m(65521);
  // Leads x1^2, x1 x2, x2^2 with x2 last: x1 * x2 is a lead but x2 * x2 too; use a staircase
  // where x2 * m is neither standard nor a lead: <x1^2, x2^3, x1 x2^2>... B contains x1 x2 and x2^2.
  auto G = gb(2, m, {{{1, {2, 0}}}, {{1, {0, 3}}}, {{1, {1, 2}}}, {{1, {1, 1}}, {-1, {0, 2}}}});
  auto B = quotient_basis(G);
  bool p1 = true;
  try {
    build_multiplication_matrix(G, B);
  } catch (const Error& e) {
    p1 = false;
    CHECK(e.code() == ErrorCode::StaircaseNotGeneric);
  }
  // Independent check of (P1) on the staircase.
  MonomialTable& t = *G.table;
  bool expect = true;
  for (MonomialId b : B.monomials) {
    MonomialId y = t.mul(b, t.intern(ExponentVector{0, 1}));
    bool is_lead = false;
    for (auto l : G.leads()) is_lead = is_lead || l == y;
    if (B.find(y) < 0 && !is_lead) expect = false;
  }
  CHECK(p1 == expect);
}

TEST_CASE("krylov sequence examples") {
  Modulus m(7);
  auto G = gb(2, m, {{{1, {1, 0}}, {-1, {0, 1}}}, {{1, {0, 2}}, {-2, {0, 0}}}});
  auto M = build_multiplication_matrix(G, quotient_basis(G));
  auto K = krylov_sequence(M, {1, 0}, 4, {{1, 0}}, m);
  CHECK(K.streams[0] == std::vector<Residue>{1, 0, 2, 0});
  CHECK(K.ops == 3 * M.ops_per_step());

  MultiplicationMatrix one;
  one.dim = 1;
  one.trivial_source = {-1};
  one.dense_rows = {0};
  one.dense = {3};
  auto K1 = krylov_sequence(one, {1}, 5, {{1}}, m);
  CHECK(K1.streams[0] == std::vector<Residue>{1, 3, 2, 6, 4});
}

TEST_CASE("krylov sequence matches dense matrix powers") {
  Modulus m(65521);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const size_t D = 1 + rng() % 8;
    MultiplicationMatrix M;
    M.dim = D;
    M.trivial_source.assign(D, -1);
    for (size_t r = 0; r < D; ++r) {
      if (rng() % 2) {
        M.trivial_source[r] = static_cast<int32_t>(rng() % D);
      } else {
        M.dense_rows.push_back(static_cast<uint32_t>(r));
        for (size_t j = 0; j < D; ++j) M.dense.push_back(static_cast<Residue>(rng() % m.p()));
      }
    }
    auto A = to_dense(M);
    std::vector<Residue> V(D), q(D);
    for (auto& x : V) x = static_cast<Residue>(rng() % m.p());
    for (auto& x : q) x = static_cast<Residue>(rng() % m.p());
    auto K = krylov_sequence(M, V, 2 * D, {q}, m);
    std::vector<Residue> cur = V;
    for (size_t k = 0; k < 2 * D; ++k) {
      Residue s = 0;
      for (size_t j = 0; j < D; ++j) s = m.add(s, m.mul(cur[j], q[j]));
      REQUIRE(K.streams[0][k] == s);
      std::vector<Residue> nxt(D, 0);
      for (size_t r = 0; r < D; ++r)
        for (size_t j = 0; j < D; ++j) nxt[r] = m.add(nxt[r], m.mul(A[r][j], cur[j]));
      cur = nxt;
    }
    REQUIRE(K.ops == (2 * D - 1) * M.ops_per_step());
    // Minimal polynomial of the sequence divides the characteristic polynomial.
    std::vector<Residue> e0(D, 0);
    e0[0] = 1;
    auto K0 = krylov_sequence(M, V, 2 * D, {e0}, m);
    auto g = berlekamp_massey(K0.streams[0], m);
    REQUIRE(up::rem(charpoly(A, m), g, m).empty());
  }
}

TEST_CASE("berlekamp-massey examples") {
  Modulus m(7);
  CHECK(berlekamp_massey({0, 1, 1, 2, 3, 5}, m) == up::UPoly{6, 6, 1});
  CHECK(berlekamp_massey({1, 1, 1, 1}, m) == up::UPoly{6, 1});
  CHECK(berlekamp_massey({1, 2, 4, 1}, m) == up::UPoly{5, 1});
  CHECK(berlekamp_massey({0, 0, 0, 0}, m) == up::UPoly{1});
}

TEST_CASE("berlekamp-massey annihilates random linear recurrences") {
  Modulus m(1073741827u);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t L = 1 + rng() % 10;
    up::UPoly c(L + 1);
    for (size_t i = 0; i < L; ++i) c[i] = static_cast<Residue>(rng() % m.p());
    c[L] = 1;
    std::vector<Residue> s(2 * L + 5);
    for (size_t i = 0; i < L; ++i) s[i] = static_cast<Residue>(rng() % m.p());
    for (size_t k = L; k < s.size(); ++k) {
      Residue acc = 0;
      for (size_t i = 0; i < L; ++i) acc = m.add(acc, m.mul(c[i], s[k - L + i]));
      s[k] = m.neg(acc);
    }
    auto g = berlekamp_massey(s, m);
    REQUIRE(g.back() == 1);
    REQUIRE(up::degree(g) <= static_cast<long>(L));
    for (size_t k = 0; k + g.size() - 1 < s.size(); ++k) {
      Residue acc = 0;
      for (size_t i = 0; i < g.size(); ++i) acc = m.add(acc, m.mul(g[i], s[k + i]));
      REQUIRE(acc == 0);
    }
  }
}

TEST_CASE("squarefree part") {
  Modulus m(65521);
  // (x-1)^2 (x+1) = x^3 - x^2 - x + 1
  CHECK(squarefree_part({1, m.neg(1), m.neg(1), 1}, m) == up::UPoly{m.neg(1), 0, 1});
  up::UPoly sq{2, 3, 1};
  CHECK(squarefree_part(sq, m) == sq);
  CHECK(squarefree_part({0, 0, 0, 1}, m) == up::UPoly{0, 1});
  Modulus small(3);
  CHECK_THROWS_AS(squarefree_part({0, 0, 0, 1}, small), Error);
  try {
    squarefree_part({0, 0, 0, 1}, small);
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "characteristic too small for squarefree");
  }
}

TEST_CASE("solve_hankel examples and dense oracle") {
  Modulus m(7);
  CHECK(solve_hankel({3, 5}, {6}, m) == up::UPoly{m.mul(6, m.inv(3))});

  // <x1 - x2, x2^2 - 2>: x1 = x2, so the Hankel solution is P = x2 and u1 = -x2.
  auto G = gb(2, m, {{{1, {1, 0}}, {-1, {0, 1}}}, {{1, {0, 2}}, {-2, {0, 0}}}});
  auto B = quotient_basis(G);
  auto M = build_multiplication_matrix(G, B);
  auto x1 = f4::normal_form(tu::poly(*G.table, m, {{1, {1, 0}}}), G);
  std::vector<Residue> q(2, 0);
  for (size_t k = 0; k < x1.size(); ++k) q[static_cast<size_t>(B.find(x1.mons[k]))] = x1.coeffs[k];
  auto K = krylov_sequence(M, {3, 4}, 4, {{1, 0}, q}, m);
  auto P = solve_hankel(K.streams[0], {K.streams[1][0], K.streams[1][1]}, m);
  CHECK(P == up::UPoly{0, 1});
  CHECK(up::neg(P, m) == up::UPoly{0, 6});

  Modulus p(65521);
  std::mt19937_64 rng(9);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const size_t D = 1 + rng() % 6;
    std::vector<Residue> s(2 * D), rhs(D);
    for (auto& x : s) x = static_cast<Residue>(rng() % p.p());
    for (auto& x : rhs) x = static_cast<Residue>(rng() % p.p());
    // Dense solve of H x = rhs, H[k][l] = s[k+l].
    std::vector<std::vector<Residue>> A(D, std::vector<Residue>(D + 1));
    for (size_t k = 0; k < D; ++k) {
      for (size_t l = 0; l < D; ++l) A[k][l] = s[k + l];
      A[k][D] = rhs[k];
    }
    bool singular = false;
    for (size_t c = 0; c < D && !singular; ++c) {
      size_t piv = c;
      while (piv < D && A[piv][c] == 0) ++piv;
      if (piv == D) {
        singular = true;
        break;
      }
      std::swap(A[piv], A[c]);
      Residue inv = p.inv(A[c][c]);
      for (auto& x : A[c]) x = p.mul(x, inv);
      for (size_t i = 0; i < D; ++i) {
        if (i == c || A[i][c] == 0) continue;
        Residue f = A[i][c];
        for (size_t k = 0; k <= D; ++k) A[i][k] = p.sub(A[i][k], p.mul(f, A[c][k]));
      }
    }
    if (singular) {
      CHECK_THROWS_AS(solve_hankel(s, rhs, p), Error);
      continue;
    }
    up::UPoly expect(D);
    for (size_t k = 0; k < D; ++k) expect[k] = A[k][D];
    up::trim(expect);
    REQUIRE(solve_hankel(s, rhs, p) == expect);
    ++solved;
  }
  CHECK(solved > 50);
}

TEST_CASE("non-shape parametrization of a non-radical ideal") {
  Modulus m(65521);
  std::mt19937_64 rng(10);
  auto G = gb(2, m, {{{1, {1, 0}}, {-1, {0, 1}}}, {{1, {0, 2}}}});
  auto R = sparse_fglm(G, rng);
  CHECK(R.g == up::UPoly{0, 0, 1});
  CHECK(R.w == up::UPoly{0, 1});
  CHECK(R.v[0].empty());
  CHECK(R.verified);
}

namespace {

using Bivariate = std::map<std::pair<int, int>, Residue>;

Bivariate bmul(const Bivariate& a, const Bivariate& b, const Modulus& m) {
  Bivariate r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& x = r[{ea.first + eb.first, ea.second + eb.second}];
      x = m.add(x, m.mul(ca, cb));
    }
  return r;
}

std::vector<tu::Term> terms(const Bivariate& f) {
  std::vector<tu::Term> out;
  for (const auto& [e, c] : f)
    if (c) out.push_back({static_cast<long>(c), {e.first, e.second}});
  return out;
}

up::UPoly random_monic(std::mt19937_64& rng, size_t d, const Modulus& m) {
  up::UPoly r(d + 1);
  for (auto& x : r) x = static_cast<Residue>(rng() % m.p());
  r.back() = 1;
  return r;
}

}  // namespace

TEST_CASE("non-shape output equals the shape parametrization of the radical") {
  Modulus m(1073741827u);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    // y = x1 - a1 x2 - a0, I = <y^2, y h, h^2>: every root of h has multiplicity 3
    // and the minimal polynomial of x2 is h^2, so deg g = 2 deg h < D = 3 deg h.
    const size_t dh = 1 + rng() % 3;
    up::UPoly h = random_monic(rng, dh, m);
    up::UPoly a{static_cast<Residue>(rng() % m.p()), static_cast<Residue>(rng() % m.p())};
    Bivariate y{{{1, 0}, 1}, {{0, 1}, m.neg(a[1])}, {{0, 0}, m.neg(a[0])}}, hb;
    for (size_t k = 0; k < h.size(); ++k) hb[{0, static_cast<int>(k)}] = h[k];
    auto G = gb(2, m, {terms(bmul(y, y, m)), terms(bmul(y, hb, m)), terms(bmul(hb, hb, m))});
    REQUIRE(quotient_basis(G).size() == 3 * dh);
    auto R = sparse_fglm(G, rng);
    up::UPoly w = squarefree_part(h, m);
    REQUIRE_FALSE(R.shape);
    REQUIRE(R.g == up::mul(h, h, m));
    REQUIRE(R.w == w);
    REQUIRE(R.v[0] == up::neg(up::rem(a, w, m), m));
    REQUIRE(R.verified);
  }
  for (int trial = 0; trial < 30; ++trial) {
    // Cyclic multiplicity: <x1 - a(x2), r1^2 r2> stays in shape position.
    up::UPoly r1 = random_monic(rng, 1 + rng() % 3, m), r2 = random_monic(rng, 1 + rng() % 3, m);
    up::UPoly h = up::mul(up::mul(r1, r1, m), r2, m);
    up::UPoly a{static_cast<Residue>(rng() % m.p()), static_cast<Residue>(rng() % m.p())};
    std::vector<tu::Term> f1{{1, {1, 0}}, {static_cast<long>(m.neg(a[1])), {0, 1}}, {static_cast<long>(m.neg(a[0])), {0, 0}}}, f2;
    for (size_t k = 0; k < h.size(); ++k) f2.push_back({static_cast<long>(h[k]), {0, static_cast<int>(k)}});
    auto R = sparse_fglm(gb(2, m, {f1, f2}), rng);
    up::UPoly w = squarefree_part(h, m);
    REQUIRE(R.shape);
    REQUIRE(R.w == w);
    REQUIRE(R.v[0] == up::neg(up::rem(a, w, m), m));
  }
}

TEST_CASE("verification examples") {
  Modulus m(1073741827u);
  std::mt19937_64 rng(12);
  {
    // Radical, shape position: x1 = x2 + 1, x2 in {1, 2, 5}.
    up::UPoly w = up::mul(up::mul({m.neg(1), 1}, {m.neg(2), 1}, m), {m.neg(5), 1}, m);
    std::vector<tu::Term> f2;
    for (size_t k = 0; k < w.size(); ++k) f2.push_back({static_cast<long>(w[k]), {0, static_cast<int>(k)}});
    auto G = gb(2, m, {{{1, {1, 0}}, {-1, {0, 1}}, {-1, {0, 0}}}, f2});
    Config cfg;
    cfg.shape_policy = VerifyPolicy::All;
    auto R = sparse_fglm(G, rng, cfg);
    REQUIRE(R.shape);
    CHECK(R.verified);
  }
  {
    // Points (x2, x3) in {(0,0), (1,0), (0,1)}, x1 = 0: leads x3^2, x2 x3, x2^2, x1.
    auto G = gb(3, m, {{{1, {1, 0, 0}}}, {{1, {0, 2, 0}}, {-1, {0, 1, 0}}}, {{1, {0, 1, 1}}},
                       {{1, {0, 0, 2}}, {-1, {0, 0, 1}}}});
    Config cfg;
    cfg.nonshape_policy = VerifyPolicy::All;
    auto R = sparse_fglm(G, rng, cfg);
    CHECK_FALSE(R.shape);
    CHECK_FALSE(R.verified);

    // The x2 stream check directly, and the degenerate lambda = 0.
    auto B = quotient_basis(G);
    auto M = build_multiplication_matrix(G, B);
    auto coords = [&](std::vector<int> e) {
      auto nf = f4::normal_form(tu::poly(*G.table, m, {{1, e}}), G);
      std::vector<Residue> q(B.size(), 0);
      for (size_t k = 0; k < nf.size(); ++k) q[static_cast<size_t>(B.find(nf.mons[k]))] = nf.coeffs[k];
      return q;
    };
    std::vector<Residue> V0(B.size());
    for (auto& x : V0) x = static_cast<Residue>(rng() % m.p());
    auto K = krylov_sequence(M, V0, 2 * B.size(), {coords({0, 0, 0}), coords({0, 1, 0}), coords({0, 2, 0})}, m);
    auto g = berlekamp_massey(K.streams[0], m);
    auto w = squarefree_part(g, m);
    auto v2 = param_nonshape(g, w, K.streams[0], K.streams[1], m);
    CHECK_FALSE(verify_parametrization(w, v2, K.streams[0], K.streams[1], K.streams[2], 12345, m));
    CHECK_FALSE(verify_parametrization(w, v2, K.streams[0], K.streams[1], K.streams[2], 0, m));
  }
  {
    // lambda = 0 with a point on x1 = 0: <x1 - x2, x2^2 - x2>.
    auto G = gb(2, m, {{{1, {1, 0}}, {-1, {0, 1}}}, {{1, {0, 2}}, {-1, {0, 1}}}});
    auto B = quotient_basis(G);
    auto M = build_multiplication_matrix(G, B);
    std::vector<Residue> e0{1, 0};
    auto x1 = f4::normal_form(tu::poly(*G.table, m, {{1, {1, 0}}}), G);
    auto x1sq = f4::normal_form(tu::poly(*G.table, m, {{1, {2, 0}}}), G);
    auto dense = [&](const SparsePolynomial& f) {
      std::vector<Residue> q(B.size(), 0);
      for (size_t k = 0; k < f.size(); ++k) q[static_cast<size_t>(B.find(f.mons[k]))] = f.coeffs[k];
      return q;
    };
    auto K = krylov_sequence(M, {7, 9}, 4, {e0, dense(x1), dense(x1sq)}, m);
    auto g = berlekamp_massey(K.streams[0], m);
    auto w = squarefree_part(g, m);
    auto v = param_nonshape(g, w, K.streams[0], K.streams[1], m);
    CHECK(verify_parametrization(w, v, K.streams[0], K.streams[1], K.streams[2], 5, m));
    CHECK_FALSE(verify_parametrization(w, v, K.streams[0], K.streams[1], K.streams[2], 0, m));
  }
}

TEST_CASE("sparse fglm examples") {
  Modulus m(7);
  // Over F_7 a random V0 or lambda is unlucky with probability about 1/3; the seed is fixed.
  std::mt19937_64 rng(1);
  auto G = gb(2, m, {{{1, {1, 0}}, {-1, {0, 1}}}, {{1, {0, 2}}, {-2, {0, 0}}}});
  auto R = sparse_fglm(G, rng);
  CHECK(R.g == up::UPoly{5, 0, 1});
  CHECK(R.w == up::UPoly{5, 0, 1});
  CHECK(R.v[0] == up::UPoly{0, 6});
  CHECK(R.shape);
  // Roots x2 = 3, 4 mod 7 and x1 = -v(x2) = x2.
  for (Residue r : {3u, 4u}) {
    CHECK(up::eval(R.w, r, m) == 0);
    CHECK(m.neg(up::eval(R.v[0], r, m)) == r);
  }

  Modulus p(65521);
  auto G1 = gb(2, p, {{{1, {1, 0}}, {-5, {0, 0}}}, {{1, {0, 1}}, {-9, {0, 0}}}});
  auto R1 = sparse_fglm(G1, rng);
  CHECK(R1.w == up::UPoly{p.neg(9), 1});
  CHECK(R1.v[0] == up::UPoly{p.neg(5)});
}

TEST_CASE("katsura back-substitution and op count") {
  Modulus m(2147483629u);
  std::mt19937_64 rng(14);
  for (size_t n : {3u, 4u, 5u, 6u, 7u}) {
    auto sys = bench::katsura(n);
    auto G = gb(sys.polys, n, m);
    auto R = sparse_fglm(G, rng);
    CHECK(R.dimension == (size_t{1} << (n - 1)));
    CHECK(R.shape);
    CHECK(R.verified);
    CHECK(tu::back_substitution_holds(sys.polys, R));
    auto M = build_multiplication_matrix(G, quotient_basis(G));
    CHECK(R.krylov_ops % ((2 * R.dimension - 1) * M.ops_per_step()) == 0);
    for (const auto& v : R.v) CHECK(up::degree(v) < up::degree(R.w));
  }
}
