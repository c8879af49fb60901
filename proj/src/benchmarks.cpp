#include "zdsolve/benchmarks.hpp"

#include <cstdlib>

namespace zds::bench {

namespace {

void add(ZPolynomial& f, ExponentVector e, long c) { f.terms.push_back({std::move(e), mpz_class(c)}); }

ExponentVector unit(size_t n, std::initializer_list<size_t> vars) {
  ExponentVector e(n);
  for (size_t v : vars) ++e.e[v];
  return e;
}

}  // namespace

System katsura(size_t n) {
  System s;
  for (size_t i = 0; i < n; ++i) s.vars.push_back("x" + std::to_string(i));
  // u_l = x_|l| for |l| < n, 0 otherwise.
  const long N = static_cast<long>(n);
  for (long m = 0; m + 1 < N; ++m) {
    ZPolynomial f;
    for (long l = -(N - 1); l <= N - 1; ++l) {
      long a = std::labs(l), b = std::labs(m - l);
      if (a >= N || b >= N) continue;
      add(f, unit(n, {static_cast<size_t>(a), static_cast<size_t>(b)}), 1);
    }
    add(f, unit(n, {static_cast<size_t>(m)}), -1);
    canonicalize(f);
    s.polys.push_back(std::move(f));
  }
  ZPolynomial lin;
  add(lin, unit(n, {0}), 1);
  for (size_t i = 1; i < n; ++i) add(lin, unit(n, {i}), 2);
  add(lin, unit(n, {}), -1);
  canonicalize(lin);
  s.polys.push_back(std::move(lin));
  return s;
}

System eco(size_t n) {
  System s;
  for (size_t i = 1; i <= n; ++i) s.vars.push_back("x" + std::to_string(i));
  // Index v here is variable x_{v+1}.
  const size_t last = n - 1;
  for (size_t k = 1; k <= n - 1; ++k) {
    ZPolynomial f;
    add(f, unit(n, {k - 1, last}), 1);
    for (size_t i = 1; i + k <= n - 1; ++i) {
      add(f, unit(n, {i - 1, i + k - 1, last}), 1);
    }
    add(f, unit(n, {}), -static_cast<long>(k));
    canonicalize(f);
    s.polys.push_back(std::move(f));
  }
  ZPolynomial lin;
  for (size_t i = 0; i < last; ++i) add(lin, unit(n, {i}), 1);
  add(lin, unit(n, {}), 1);
  canonicalize(lin);
  s.polys.push_back(std::move(lin));
  return s;
}

}  // namespace zds::bench
