#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "zdsolve/f4.hpp"
#include "zdsolve/upoly.hpp"

namespace zds::fglm {

using up::UPoly;

struct QuotientBasis {
  std::vector<MonomialId> monomials;  // increasing DRL, monomials[0] = 1
  std::unordered_map<MonomialId, uint32_t> index;

  size_t size() const { return monomials.size(); }
  // -1 when m is not a standard monomial.
  long find(MonomialId m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : static_cast<long>(it->second);
  }
};

// Throws PositiveDimension when some variable has no pure power among the leads.
QuotientBasis quotient_basis(const f4::GroebnerBasis& G);

// Multiplication by one variable on the quotient algebra. Row r holds the
// coordinates of var * B[r]: either a single 1 (trivial) or a dense vector.
struct MultiplicationMatrix {
  size_t dim = 0;
  std::vector<int32_t> trivial_source;  // -1 for dense rows
  std::vector<uint32_t> dense_rows;
  std::vector<Residue> dense;           // dense_rows.size() x dim, row major

  size_t trivial_count() const { return dim - dense_rows.size(); }
  uint64_t ops_per_step() const { return dense_rows.size() * dim + trivial_count(); }
  const Residue* dense_row(size_t k) const { return dense.data() + k * dim; }
};

// Throws StaircaseNotGeneric when (P1) fails for the chosen variable.
MultiplicationMatrix build_multiplication_matrix(const f4::GroebnerBasis& G, const QuotientBasis& B, size_t var);
inline MultiplicationMatrix build_multiplication_matrix(const f4::GroebnerBasis& G, const QuotientBasis& B) {
  return build_multiplication_matrix(G, B, G.table->nvars() - 1);
}

// streams[j][k] = <V_k, probes[j]> for k < count, V_{k+1} = M V_k.
struct KrylovTable {
  std::vector<std::vector<Residue>> streams;
  uint64_t ops = 0;  // matrix-vector work actually performed
};

KrylovTable krylov_sequence(const MultiplicationMatrix& M, const std::vector<Residue>& V0, size_t count,
                            const std::vector<std::vector<Residue>>& probes, const Modulus& m);

// Monic minimal annihilator c_0 + ... + x^e; the zero sequence gives 1.
UPoly berlekamp_massey(const std::vector<Residue>& s, const Modulus& m);

// g / gcd(g, g'), monic. Throws CharacteristicTooSmall when p <= deg g.
UPoly squarefree_part(const UPoly& g, const Modulus& m);

// Solution P of sum_l P_l s_{k+l} = rhs_k (k < D = |rhs|) from the 2D terms
// of s. The parametrization of the matching variable is -P. Throws
// UnluckyVector when the Hankel matrix is singular.
UPoly solve_hankel(const std::vector<Residue>& seq, const std::vector<Residue>& rhs, const Modulus& m);

// v = -(g sum_{k<d} t_k x^{d-1-k} quo x^d) h^-1 mod w with d = deg g and h
// built the same way from s. Throws UnluckyVector when h is not invertible mod w.
UPoly param_nonshape(const UPoly& g, const UPoly& w, const std::vector<Residue>& s, const std::vector<Residue>& t,
                     const Modulus& m);

// Recomputes the parametrization from the sequence shifted by (x_i + lambda)
// and compares it with v.
bool verify_parametrization(const UPoly& w, const UPoly& v, const std::vector<Residue>& s,
                            const std::vector<Residue>& t, const std::vector<Residue>& t2, Residue lambda,
                            const Modulus& m);

enum class VerifyPolicy { None, OneRandom, All };

struct Config {
  VerifyPolicy shape_policy = VerifyPolicy::OneRandom;
  VerifyPolicy nonshape_policy = VerifyPolicy::All;
  uint32_t vector_retries = 3;
  uint32_t lambda_retries = 1;
};

// x_i = -v[i](x_n) on the zeros of w, for i < n-1.
struct RationalParametrization {
  size_t n = 0;
  size_t dimension = 0;  // D
  UPoly g;
  UPoly w;
  std::vector<UPoly> v;
  bool shape = false;
  bool verified = false;
  uint32_t prime = 0;
  uint64_t krylov_ops = 0;
};

RationalParametrization sparse_fglm(const f4::GroebnerBasis& G, std::mt19937_64& rng, const Config& cfg = {});

}  // namespace zds::fglm
