#include "zdsolve/multimod.hpp"

#include <chrono>
#include <future>

#include "zdsolve/upoly.hpp"

namespace zds::multimod {

uint32_t PrimeStream::next() {
  std::uniform_int_distribution<uint32_t> dist((1u << 30) + 1, (1u << 31) - 1);
  for (;;) {
    uint32_t p = dist(rng_) | 1u;
    if (p >= (1u << 31)) continue;
    if (!is_prime_u64(p) || seen_.count(p)) continue;
    seen_.insert(p);
    return p;
  }
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& M) {
  if (a == 0) return mpq_class(0);
  mpz_class bound = M / 2;
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  mpz_class r0 = M, r1 = a, s0 = 0, s1 = 1, q, t;
  while (r1 > bound) {
    mpz_fdiv_qr(q.get_mpz_t(), t.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    r0 = std::move(r1);
    r1 = std::move(t);
    t = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(t);
  }
  if (abs(s1) > bound || s1 == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class x(r1, s1);
  x.canonicalize();
  return x;
}

std::optional<Residue> reduce_rational(const mpq_class& x, uint32_t p) {
  unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  Modulus m(p);
  Residue num = static_cast<Residue>(mpz_fdiv_ui(x.get_num_mpz_t(), p));
  return m.mul(num, m.inv(static_cast<Residue>(den)));
}

bool CrtAccumulator::add(const Layout& layout, const std::vector<Residue>& values, uint32_t p) {
  if (residues_.empty() && primes_ == 0) {
    layout_ = layout;
    residues_.assign(values.begin(), values.end());
    modulus_ = p;
    primes_ = 1;
    return true;
  }
  if (!(layout == layout_) || values.size() != residues_.size()) return false;
  Modulus m(p);
  Residue Minv = m.inv(static_cast<Residue>(mpz_fdiv_ui(modulus_.get_mpz_t(), p)));
  for (size_t i = 0; i < values.size(); ++i) {
    Residue x = static_cast<Residue>(mpz_fdiv_ui(residues_[i].get_mpz_t(), p));
    Residue t = m.mul(m.sub(values[i], x), Minv);
    mpz_addmul_ui(residues_[i].get_mpz_t(), modulus_.get_mpz_t(), t);
  }
  modulus_ *= p;
  ++primes_;
  return true;
}

Layout layout_of(const fglm::RationalParametrization& R) {
  return {R.n, up::degree(R.g), up::degree(R.w)};
}

std::vector<Residue> image_slots(const fglm::RationalParametrization& R) {
  Modulus m(R.prime);
  std::vector<Residue> out(R.g.begin(), R.g.end());
  out.insert(out.end(), R.w.begin(), R.w.end());
  const size_t dw = R.w.empty() ? 0 : R.w.size() - 1;
  up::UPoly dwp = up::derivative(R.w, m);
  for (const auto& v : R.v) {
    up::UPoly vt = dw ? up::rem(up::mul(v, dwp, m), R.w, m) : up::UPoly{};
    vt.resize(dw, 0);
    out.insert(out.end(), vt.begin(), vt.end());
  }
  return out;
}

LiftedParametrization reconstruct(const CrtAccumulator& acc, bool& ok) {
  LiftedParametrization L;
  const Layout& lay = acc.layout();
  const auto& res = acc.residues();
  ok = false;
  // The last slot usually carries the largest height: try it alone first.
  if (!res.empty() && !rational_reconstruct(res.back(), acc.modulus())) return L;
  std::vector<mpq_class> q(res.size());
  for (size_t i = 0; i < res.size(); ++i) {
    auto x = rational_reconstruct(res[i], acc.modulus());
    if (!x) return L;
    q[i] = *x;
  }
  size_t pos = 0;
  const size_t ng = static_cast<size_t>(lay.deg_g + 1), nw = static_cast<size_t>(lay.deg_w + 1);
  L.n = lay.n;
  L.g.assign(q.begin(), q.begin() + static_cast<long>(ng));
  pos += ng;
  L.w.assign(q.begin() + static_cast<long>(pos), q.begin() + static_cast<long>(pos + nw));
  pos += nw;
  for (size_t i = 0; i + 1 < lay.n; ++i) {
    L.vt.emplace_back(q.begin() + static_cast<long>(pos), q.begin() + static_cast<long>(pos + nw - 1));
    pos += nw - 1;
  }
  L.primes_used = acc.primes();
  ok = true;
  return L;
}

std::optional<std::vector<Residue>> reduce_lifted(const LiftedParametrization& L, uint32_t p) {
  std::vector<Residue> out;
  auto push = [&](const std::vector<mpq_class>& v) {
    for (const auto& x : v) {
      auto r = reduce_rational(x, p);
      if (!r) return false;
      out.push_back(*r);
    }
    return true;
  };
  if (!push(L.g) || !push(L.w)) return std::nullopt;
  for (const auto& v : L.vt)
    if (!push(v)) return std::nullopt;
  return out;
}

namespace {

uint64_t prime_seed(uint64_t seed, uint32_t p) {
  uint64_t x = seed * 0x9E3779B97F4A7C15ULL + p;
  x ^= x >> 31;
  return x * 0xBF58476D1CE4E5B9ULL;
}

std::vector<SparsePolynomial> images(const std::vector<ZPolynomial>& F, MonomialTable& t, const Modulus& m) {
  std::vector<SparsePolynomial> out;
  for (const auto& f : F) out.push_back(reduce_mod(f, t, m));
  return out;
}

struct Image {
  bool ok = false;
  fglm::RationalParametrization R;
};

Image run_image(const std::vector<ZPolynomial>& F, size_t nvars, uint32_t p, const Config& cfg,
                const std::optional<f4::Trace>& trace) {
  Image img;
  try {
    Modulus m(p);
    auto t = std::make_shared<MonomialTable>(nvars);
    auto Fp = images(F, *t, m);
    f4::GroebnerBasis G;
    if (trace) {
      G = f4::trace_apply(*trace, Fp, t, m);
    } else {
      f4::Config fc;
      fc.la = cfg.la == LaMode::Probabilistic ? f4::LinearAlgebra::Probabilistic : f4::LinearAlgebra::Exact;
      fc.seed = prime_seed(cfg.seed, p);
      G = f4::f4(Fp, t, m, fc).basis;
    }
    std::mt19937_64 rng(prime_seed(cfg.seed, p) ^ 0x5bd1e995);
    img.R = fglm::sparse_fglm(G, rng, cfg.fglm);
    img.ok = img.R.verified;
  } catch (const Error&) {
    img.ok = false;
  }
  return img;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<ZPolynomial> substituted(const std::vector<ZPolynomial>& F, const std::vector<long>& c) {
  std::vector<ZPolynomial> out;
  for (const auto& f : F) out.push_back(substitute_last(f, c));
  return out;
}

// Thrown inside the driver to move to the next linear substitution.
struct NeedSubstitution {
  ErrorCode code;
};

}  // namespace

fglm::RationalParametrization solve_modular(const std::vector<ZPolynomial>& F, size_t nvars, uint32_t p,
                                            uint64_t seed, const fglm::Config& cfg, std::optional<f4::Trace>* trace) {
  Modulus m(p);
  auto t = std::make_shared<MonomialTable>(nvars);
  auto Fp = images(F, *t, m);
  f4::Config fc;
  fc.trace = trace != nullptr;
  f4::Result res = f4::f4(Fp, t, m, fc);
  if (trace) *trace = std::move(res.trace);
  std::mt19937_64 rng(prime_seed(seed, p) ^ 0x5bd1e995);
  return fglm::sparse_fglm(res.basis, rng, cfg);
}

Outcome solve_over_rationals(const std::vector<ZPolynomial>& F, size_t nvars, const Config& cfg) {
  Outcome out;
  PrimeStream primes(prime_seed(cfg.seed, 1));
  PrimeStream cert(prime_seed(cfg.seed, 2));
  std::mt19937_64 crng(prime_seed(cfg.seed, 3));
  std::vector<long> c;
  ErrorCode last_failure = ErrorCode::StaircaseNotGeneric;

  for (size_t sub = 0; sub <= cfg.max_substitutions; ++sub) {
    if (sub > 0) {
      c.assign(nvars - 1, 0);
      for (auto& x : c) x = 1 + static_cast<long>(crng() % 9);
    }
    out.system = sub > 0 ? substituted(F, c) : F;
    const auto& S = out.system;

    try {
      if (cfg.single_prime || cfg.prime != 0) {
        uint32_t p = cfg.prime ? cfg.prime : primes.next();
        auto t0 = std::chrono::steady_clock::now();
        fglm::RationalParametrization R;
        try {
          R = solve_modular(S, nvars, p, cfg.seed, cfg.fglm);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::StaircaseNotGeneric) throw NeedSubstitution{e.code()};
          throw;
        }
        if (!R.verified) throw NeedSubstitution{ErrorCode::Unverified};
        out.diag.seconds_learn = since(t0);
        out.modular = true;
        out.modular_result = std::move(R);
        out.lifted.linear_form = c;
        out.diag.primes_used = 1;
        return out;
      }

      for (size_t relearn = 0;; ++relearn) {
        if (relearn > cfg.max_relearn) throw Error(ErrorCode::UnluckyLearningPrime);
        out.diag.relearns = relearn;
        const uint32_t p0 = primes.next();
        auto t0 = std::chrono::steady_clock::now();
        std::optional<f4::Trace> trace;
        fglm::RationalParametrization R0;
        try {
          R0 = solve_modular(S, nvars, p0, cfg.seed, cfg.fglm, cfg.la == LaMode::Tracer ? &trace : nullptr);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::StaircaseNotGeneric) throw NeedSubstitution{e.code()};
          if (e.code() == ErrorCode::UnluckyVector) continue;
          throw;
        }
        if (!R0.verified) throw NeedSubstitution{ErrorCode::Unverified};
        out.diag.seconds_learn += since(t0);

        CrtAccumulator acc;
        acc.add(layout_of(R0), image_slots(R0), p0);
        size_t consecutive_bad = 0;
        size_t next_attempt = cfg.first_reconstruction_bits;
        bool relearn_needed = false;
        auto t1 = std::chrono::steady_clock::now();
        while (!relearn_needed) {
          if (acc.primes() + out.diag.bad_primes >= cfg.max_primes)
            throw Error(ErrorCode::TooManyBadPrimes, "prime budget exhausted");
          const unsigned batch = std::max(1u, cfg.threads);
          std::vector<uint32_t> ps;
          for (unsigned b = 0; b < batch; ++b) ps.push_back(primes.next());
          std::vector<Image> imgs(ps.size());
          if (batch == 1) {
            imgs[0] = run_image(S, nvars, ps[0], cfg, trace);
          } else {
            std::vector<std::future<Image>> fut;
            for (uint32_t p : ps)
              fut.push_back(std::async(std::launch::async, run_image, std::cref(S), nvars, p, std::cref(cfg),
                                       std::cref(trace)));
            for (size_t b = 0; b < ps.size(); ++b) imgs[b] = fut[b].get();
          }
          for (size_t b = 0; b < ps.size(); ++b) {
            const Image& img = imgs[b];
            if (!img.ok || !acc.add(layout_of(img.R), image_slots(img.R), ps[b])) {
              ++out.diag.bad_primes;
              if (++consecutive_bad >= cfg.max_bad_primes) {
                relearn_needed = true;
                break;
              }
              continue;
            }
            consecutive_bad = 0;
            if (mpz_sizeinbase(acc.modulus().get_mpz_t(), 2) < next_attempt) continue;
            next_attempt *= 2;
            ++out.diag.reconstructions;
            bool ok = false;
            LiftedParametrization L = reconstruct(acc, ok);
            if (!ok) continue;
            // Certification against a fresh prime.
            bool certified = false;
            for (int tries = 0; tries < 5; ++tries) {
              uint32_t q = cert.next();
              auto expected = reduce_lifted(L, q);
              if (!expected) continue;
              Image direct = run_image(S, nvars, q, cfg, trace);
              if (!direct.ok || !(layout_of(direct.R) == acc.layout())) continue;
              certified = image_slots(direct.R) == *expected;
              break;
            }
            if (!certified) continue;
            L.dimension = R0.dimension;
            L.certified = true;
            L.linear_form = c;
            out.lifted = std::move(L);
            out.diag.primes_used = acc.primes();
            out.diag.seconds_images = since(t1);
            return out;
          }
        }
      }
    } catch (const NeedSubstitution& ns) {
      last_failure = ns.code;
    }
  }
  throw Error(last_failure);
}

}  // namespace zds::multimod
