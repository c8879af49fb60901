#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "zdsolve/error.hpp"
#include "zdsolve/usolve.hpp"

using namespace zds;
using namespace zds::usolve;

namespace {

IntegerPolynomial from_roots(const std::vector<std::pair<long, long>>& roots) {
  // prod (q x - p) for p/q
  IntegerPolynomial f{1};
  for (auto [p, q] : roots) {
    IntegerPolynomial g(f.size() + 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
      g[i + 1] += f[i] * q;
      g[i] -= f[i] * p;
    }
    f = g;
  }
  return f;
}

mpq_class eval_q(const IntegerPolynomial& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + mpq_class(f[i]);
  return acc;
}

mpq_class lo(const DyadicInterval& I) { return mpq_class(I.a) / mpq_class(mpz_class(1) << I.k); }
mpq_class hi(const DyadicInterval& I) { return mpq_class(I.b) / mpq_class(mpz_class(1) << I.k); }
mpq_class val(const Dyadic& d) { return mpq_class(d.num) / mpq_class(mpz_class(1) << d.exp); }

IntegerPolynomial random_poly(std::mt19937_64& rng, size_t deg, size_t bits) {
  gmp_randclass r(gmp_randinit_default);
  r.seed(static_cast<unsigned long>(rng()));
  IntegerPolynomial f(deg + 1);
  for (auto& c : f) {
    c = r.get_z_bits(bits);
    if (rng() & 1) c = -c;
  }
  if (f.back() == 0) f.back() = 1;
  return f;
}

IntegerPolynomial school_mul(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  IntegerPolynomial r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Checks soundness and ordering; returns the number of roots found.
size_t check_isolation(const IntegerPolynomial& f, const IsolationResult& R) {
  for (const auto& I : R.intervals) {
    REQUIRE(lo(I) < hi(I));
    REQUIRE(sgn(eval_q(f, lo(I))) * sgn(eval_q(f, hi(I))) < 0);
  }
  for (size_t i = 1; i < R.intervals.size(); ++i) REQUIRE(hi(R.intervals[i - 1]) < lo(R.intervals[i]));
  for (const auto& r : R.exact_roots) {
    REQUIRE(eval_q(f, val(r)) == 0);
    for (const auto& I : R.intervals) REQUIRE((val(r) <= lo(I) || val(r) >= hi(I)));
  }
  return R.count();
}

}  // namespace

TEST_CASE("root bound examples") {
  CHECK(root_bound({-4, 0, 1}) == 3);
  CHECK(root_bound({-1, 1}) == 1);
  CHECK(root_bound({1, -1, 1, 0, -1, 1}) == 1);
  CHECK(root_bound({0, 0, 1}) == 0);
}

TEST_CASE("taylor shift examples") {
  CHECK(taylor_shift_1({0, 0, 1}) == IntegerPolynomial{1, 2, 1});
  CHECK(taylor_shift_1({-1, 3, -3, 1}) == IntegerPolynomial{0, 0, 0, 1});
  CHECK(taylor_shift_fast({-1, 3, -3, 1}, 1) == IntegerPolynomial{0, 0, 0, 1});
}

TEST_CASE("kronecker product matches schoolbook") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    auto a = random_poly(rng, 1 + rng() % 60, 1 + rng() % 300);
    auto b = random_poly(rng, 1 + rng() % 60, 1 + rng() % 300);
    REQUIRE(mul(a, b) == school_mul(a, b));
  }
}

TEST_CASE("fast and classical taylor shift agree") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    auto f = random_poly(rng, rng() % 200, 1 + rng() % 200);
    REQUIRE(taylor_shift_fast(f, 1 + rng() % 16) == taylor_shift_classical(f));
  }
  auto f = random_poly(rng, 1024, 1000);
  CHECK(taylor_shift_1(f) == taylor_shift_classical(f));
  CHECK(taylor_shift_fast(f, 512) == taylor_shift_classical(f));
}

TEST_CASE("scale by powers of two") {
  CHECK(scale_2exp({1, 1, 1}, 1) == IntegerPolynomial{1, 2, 4});
  CHECK(scale_2exp({1, 1, 1}, 0) == IntegerPolynomial{1, 1, 1});
  CHECK(scale_2exp({1, 1, 1}, -1) == IntegerPolynomial{4, 2, 1});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto f = random_poly(rng, rng() % 10, 20);
    long k = static_cast<long>(rng() % 7);
    auto g = scale_2exp(scale_2exp(f, k), -k);
    mpz_class c = mpz_class(1) << (k * static_cast<long>(f.size() - 1));
    for (size_t i = 0; i < f.size(); ++i) REQUIRE(g[i] == f[i] * c);
  }
}

TEST_CASE("sign variations") {
  auto v = sign_variations({2, -3, 1}, 64);
  CHECK(v.count == 2);
  CHECK(v.certified);
  CHECK(sign_variations({1, 0, 1}, 64).count == 0);
  CHECK(sign_variations({-1, 1}, 64).count == 1);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto f = random_poly(rng, rng() % 12, 1 + rng() % 200);
    if (rng() % 3 == 0) f[rng() % f.size()] = rng() % 5;  // small or zero entries
    trim(f);
    if (f.empty()) continue;
    auto exact = sign_variations(f, 100000);
    REQUIRE(exact.certified);
    for (size_t P = 4; P < 400; P *= 2) {
      auto a = sign_variations(f, P);
      if (a.certified) REQUIRE(a.count == exact.count);
    }
  }
}

TEST_CASE("descartes bound on factored polynomials") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::pair<long, long>> roots;
    size_t positive = 0;
    for (size_t i = 0; i < 1 + rng() % 8; ++i) {
      long r = static_cast<long>(rng() % 41) - 20;
      if (r == 0) r = 1;
      roots.push_back({r, 1});
      if (r > 0) ++positive;
    }
    // complex pair x^2 + 1 to exercise the gap
    auto f = from_roots(roots);
    f = school_mul(f, {1, 0, 1});
    size_t sigma = sign_variations(f, 100000).count;
    REQUIRE(sigma >= positive);
    REQUIRE((sigma - positive) % 2 == 0);
  }
}

TEST_CASE("descartes on the unit interval") {
  auto f = from_roots({{1, 3}, {2, 3}});
  auto R = descartes_isolate_01(f);
  REQUIRE(R.intervals.size() == 2);
  CHECK(R.exact_roots.empty());
  check_isolation(f, R);
  CHECK(lo(R.intervals[0]) < mpq_class(1, 3));
  CHECK(mpq_class(1, 3) < hi(R.intervals[0]));
  CHECK(hi(R.intervals[0]) <= lo(R.intervals[1]));

  auto h = descartes_isolate_01({-1, 2});
  CHECK(h.intervals.empty());
  REQUIRE(h.exact_roots.size() == 1);
  CHECK(val(h.exact_roots[0]) == mpq_class(1, 2));

  CHECK(descartes_isolate_01({1, 0, 1}).count() == 0);

  auto sq = from_roots({{1, 3}, {1, 3}});
  CHECK_THROWS_AS(descartes_isolate_01(sq), Error);
  try {
    descartes_isolate_01(sq);
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "input likely not squarefree");
  }
}

TEST_CASE("isolate real roots examples") {
  auto f = from_roots({{1, 1}, {2, 1}, {-3, 1}});
  auto R = isolate_real_roots(f);
  CHECK(check_isolation(f, R) == 3);
  for (long r : {-3L, 1L, 2L}) {
    int found = 0;
    for (const auto& I : R.intervals) found += lo(I) < r && r < hi(I);
    for (const auto& e : R.exact_roots) found += val(e) == r;
    CHECK(found == 1);
  }
  CHECK(isolate_real_roots({1, 0, 1}).count() == 0);
  CHECK_THROWS_AS(isolate_real_roots({}), Error);

  std::vector<std::pair<long, long>> twenty;
  for (long i = 1; i <= 20; ++i) twenty.push_back({i, 1});
  auto w = from_roots(twenty);
  CHECK(check_isolation(w, isolate_real_roots(w)) == 20);

  auto z = from_roots({{0, 1}, {1, 1}, {1, 1}, {-5, 7}});
  CHECK(check_isolation(z, isolate_real_roots(z)) == 3);
  CHECK(squarefree_part(from_roots({{1, 1}, {1, 1}, {-2, 1}})) == from_roots({{1, 1}, {-2, 1}}));
}

TEST_CASE("completeness on integer roots") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    std::vector<long> pool;
    for (long i = -50; i <= 50; ++i) pool.push_back(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    size_t k = 1 + rng() % 15;
    std::vector<std::pair<long, long>> roots;
    for (size_t i = 0; i < k; ++i) roots.push_back({pool[i], 1});
    auto f = from_roots(roots);
    REQUIRE(check_isolation(f, isolate_real_roots(f)) == k);
  }
}

TEST_CASE("random rational products") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    std::set<std::pair<long, long>> seen;
    std::vector<std::pair<long, long>> roots;
    size_t k = 1 + rng() % 30;
    while (roots.size() < k) {
      long q = 1 + static_cast<long>(rng() % (t < 10 ? 60 : 1000));
      long p = static_cast<long>(rng() % 201) - 100;
      long g = std::gcd(std::abs(p), q);
      if (g == 0) g = q;
      if (seen.insert({p / g, q / g}).second) roots.push_back({p / g, q / g});
    }
    auto f = from_roots(roots);
    REQUIRE(check_isolation(f, isolate_real_roots(f)) == k);
  }
}

TEST_CASE("refinement") {
  IntegerPolynomial f{-2, 0, 1};
  auto J = refine_interval(f, {1, 2, 0}, -30);
  CHECK((hi(J) - lo(J)) <= mpq_class(1, 1 << 30));
  CHECK(lo(J) * lo(J) < 2);
  CHECK(hi(J) * hi(J) > 2);
  CHECK(lo(J) >= 1);
  CHECK(hi(J) <= 2);

  auto K = refine_interval(f, J, -10);
  CHECK(lo(K) >= lo(J));
  CHECK(hi(K) <= hi(J));

  auto L = refine_interval({-1, 1}, {0, 2, 0}, -20);
  CHECK(lo(L) < 1);
  CHECK(hi(L) > 1);
  CHECK((hi(L) - lo(L)) <= mpq_class(1, 1 << 20));

  CHECK_THROWS_AS(refine_interval(f, {2, 3, 0}, -10), Error);

  std::vector<std::pair<long, long>> twenty;
  for (long i = 1; i <= 20; ++i) twenty.push_back({i * 3 + 1, 3});
  auto w = from_roots(twenty);
  auto R = isolate_real_roots(w);
  for (const auto& I : R.intervals) {
    auto N = refine_interval(w, I, -200);
    REQUIRE(lo(N) >= lo(I));
    REQUIRE(hi(N) <= hi(I));
    REQUIRE((hi(N) - lo(N)) <= mpq_class(1) / mpq_class(mpz_class(1) << 200));
    REQUIRE(sgn(eval_q(w, lo(N))) * sgn(eval_q(w, hi(N))) < 0);
  }
}
