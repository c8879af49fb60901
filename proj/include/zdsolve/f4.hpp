#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "zdsolve/modarith.hpp"
#include "zdsolve/polyring.hpp"

namespace zds::f4 {

enum class LinearAlgebra { Exact, Probabilistic };

struct Config {
  LinearAlgebra la = LinearAlgebra::Exact;
  uint32_t block_size = 32;
  // Zero reductions that end a probabilistic block.
  uint32_t zero_confirmations = 1;
  // A new pivot is stored dense when its fill exceeds this fraction of its span.
  double dense_threshold = 0.25;
  uint64_t seed = 1;
  bool trace = false;
};

struct Stats {
  uint32_t rounds = 0;
  uint64_t rows = 0;
  uint64_t zero_reductions = 0;
  uint64_t max_columns = 0;
  double la_seconds = 0;
};

struct GroebnerBasis {
  std::shared_ptr<MonomialTable> table;
  Modulus modulus{2};
  // Monic, sorted by increasing lead monomial.
  std::vector<SparsePolynomial> elements;
  bool reduced = false;

  size_t size() const { return elements.size(); }
  std::vector<MonomialId> leads() const;
};

// j < 0 marks a generator pair: input i enters as a row of its own.
struct SPair {
  int32_t i;
  int32_t j;
  MonomialId lcm;
  uint32_t degree;
};

struct BasisEntry {
  SparsePolynomial poly;
  bool redundant = false;
};

// Gebauer-Moller installation of G[h]. Adds surviving pairs (h, g), drops old
// pairs killed by the chain criterion, flags elements whose lead lm(h) divides.
void update_pairs(std::vector<SPair>& pairs, std::vector<BasisEntry>& basis, size_t h, MonomialTable& t);

// All pairs of minimal degree; removed from `pairs`. Throws EmptyPairSet.
std::vector<SPair> select_pairs(std::vector<SPair>& pairs);

struct RowSource {
  uint32_t index;
  bool from_input;
  MonomialId mult;
};

struct MacaulayMatrix {
  struct Row {
    RowSource src;
    std::vector<uint32_t> cols;  // ascending column indices
    const Residue* vals;         // borrowed from the generating polynomial
  };
  std::vector<MonomialId> columns;  // decreasing DRL
  std::vector<Row> pivots;          // sorted by lead column, distinct leads
  std::vector<Row> todo;            // sorted by lead column, then sparsity
};

// Rows of L plus reducers until closure. Sources refer to `basis` or `inputs`.
MacaulayMatrix symbolic_preprocessing(const std::vector<SPair>& L, const std::vector<BasisEntry>& basis,
                                      const std::vector<SparsePolynomial>& inputs, MonomialTable& t);

struct EliminationResult {
  std::vector<SparsePolynomial> rows;  // monic, new leads
  std::vector<uint32_t> todo_index;    // originating todo row (exact mode)
  uint64_t zero_reductions = 0;
};

EliminationResult exact_elimination(const MacaulayMatrix& M, const Modulus& m, double dense_threshold = 0.25);
EliminationResult probabilistic_elimination(const MacaulayMatrix& M, uint32_t block_size, std::mt19937_64& rng,
                                            const Modulus& m, uint32_t zero_confirmations = 1,
                                            double dense_threshold = 0.25);

struct TraceRow {
  uint32_t index;
  bool from_input;
  ExponentVector mult;
};

struct TraceRound {
  std::vector<TraceRow> reducers;
  std::vector<TraceRow> todo;
  std::vector<ExponentVector> new_leads;
};

struct Trace {
  size_t nvars = 0;
  size_t ninputs = 0;
  std::vector<TraceRound> rounds;
  std::vector<uint32_t> final_indices;  // basis indices of the minimal basis, increasing lead
  std::vector<ExponentVector> final_leads;
};

struct Result {
  GroebnerBasis basis;
  std::optional<Trace> trace;
  Stats stats;
};

// Reduced DRL basis of <F>. Throws ZeroIdealInput when every generator is zero.
Result f4(const std::vector<SparsePolynomial>& F, std::shared_ptr<MonomialTable> table, const Modulus& m,
          const Config& cfg = {});

// Replays a learned trace on F mod another prime. Throws BadPrime on divergence.
GroebnerBasis trace_apply(const Trace& trace, const std::vector<SparsePolynomial>& F,
                          std::shared_ptr<MonomialTable> table, const Modulus& m, Stats* stats = nullptr);

// Tail-reduces a minimal basis (distinct leads, none dividing another).
std::vector<SparsePolynomial> reduce_basis(const std::vector<SparsePolynomial>& minimal, MonomialTable& t,
                                           const Modulus& m);

SparsePolynomial normal_form(const SparsePolynomial& f, const GroebnerBasis& G);

}  // namespace zds::f4
