#include <algorithm>
#include <chrono>
#include <numeric>

#include "zdsolve/f4.hpp"
#include "f4_internal.hpp"

namespace zds::f4 {

std::vector<MonomialId> GroebnerBasis::leads() const {
  std::vector<MonomialId> out;
  for (const auto& g : elements) out.push_back(g.lead());
  return out;
}

namespace {

std::vector<SparsePolynomial> monic_inputs(const std::vector<SparsePolynomial>& F, const Modulus& m) {
  std::vector<SparsePolynomial> in = F;
  for (auto& f : in) make_monic(f, m);
  return in;
}

// Reducers reachable from the surviving todo rows, scanning columns left to right.
std::vector<bool> needed_reducers(const MacaulayMatrix& M, const std::vector<uint32_t>& survivors) {
  const size_t n = M.columns.size();
  std::vector<int32_t> pivot_at(n, -1);
  for (size_t k = 0; k < M.pivots.size(); ++k) pivot_at[M.pivots[k].cols[0]] = static_cast<int32_t>(k);
  std::vector<bool> need_col(n, false), need_row(M.pivots.size(), false);
  for (uint32_t k : survivors)
    for (uint32_t c : M.todo[k].cols) need_col[c] = true;
  for (size_t c = 0; c < n; ++c) {
    if (!need_col[c] || pivot_at[c] < 0) continue;
    need_row[pivot_at[c]] = true;
    for (uint32_t d : M.pivots[pivot_at[c]].cols) need_col[d] = true;
  }
  return need_row;
}

TraceRow to_trace_row(const RowSource& s, const MonomialTable& t) {
  return {s.index, s.from_input, t.exponents(s.mult)};
}

std::vector<SparsePolynomial> finalize(const std::vector<SparsePolynomial>& elements,
                                       const std::vector<uint32_t>& indices, MonomialTable& t, const Modulus& m) {
  std::vector<SparsePolynomial> minimal;
  for (uint32_t i : indices) minimal.push_back(elements[i]);
  return reduce_basis(minimal, t, m);
}

}  // namespace

std::vector<SparsePolynomial> reduce_basis(const std::vector<SparsePolynomial>& minimal, MonomialTable& t,
                                           const Modulus& m) {
  std::vector<BasisEntry> basis;
  for (const auto& g : minimal) basis.push_back({g, false});
  detail::MatrixBuilder B;
  B.begin(t);
  std::vector<uint32_t> pivot_rows;
  for (size_t i = 0; i < basis.size(); ++i) {
    pivot_rows.push_back(B.add_row(basis[i].poly, {static_cast<uint32_t>(i), false, t.one()}));
    B.set_pivot(basis[i].poly.lead());
  }
  B.close(basis, pivot_rows);
  MacaulayMatrix M;
  B.finish(pivot_rows, {}, M);

  detail::Eliminator E;
  E.reset(M.columns.size(), m, 1.0);
  for (const auto& r : M.pivots) E.add_borrowed(r);
  std::vector<SparsePolynomial> out(basis.size());
  for (const auto& r : M.pivots) {
    if (r.src.mult != t.one()) continue;
    for (size_t q = 0; q < r.cols.size(); ++q) E.buf[r.cols[q]] = r.vals[q];
    size_t first = E.reduce(r.cols[0], r.cols[0]);
    E.extract(first, out[r.src.index], M.columns, false);
  }
  std::sort(out.begin(), out.end(),
            [&](const SparsePolynomial& a, const SparsePolynomial& b) { return t.cmp(a.lead(), b.lead()) < 0; });
  return out;
}

SparsePolynomial normal_form(const SparsePolynomial& f, const GroebnerBasis& G) {
  if (f.empty()) return f;
  MonomialTable& t = *G.table;
  std::vector<BasisEntry> basis;
  for (const auto& g : G.elements) basis.push_back({g, false});
  detail::MatrixBuilder B;
  B.begin(t);
  std::vector<uint32_t> pivot_rows;
  uint32_t row = B.add_row(f, {0, true, t.one()});
  B.close(basis, pivot_rows);
  MacaulayMatrix M;
  B.finish(pivot_rows, {row}, M);
  detail::Eliminator E;
  E.reset(M.columns.size(), G.modulus, 1.0);
  for (const auto& r : M.pivots) E.add_borrowed(r);
  const auto& r = M.todo[0];
  for (size_t q = 0; q < r.cols.size(); ++q) E.buf[r.cols[q]] = r.vals[q];
  size_t first = E.reduce(r.cols[0]);
  SparsePolynomial out;
  if (first < E.n) E.extract(first, out, M.columns, false);
  return out;
}

Result f4(const std::vector<SparsePolynomial>& F, std::shared_ptr<MonomialTable> table, const Modulus& m,
          const Config& cfg) {
  MonomialTable& t = *table;
  const std::vector<SparsePolynomial> inputs = monic_inputs(F, m);
  std::vector<SPair> pairs;
  for (size_t i = 0; i < inputs.size(); ++i)
    if (!inputs[i].empty())
      pairs.push_back({static_cast<int32_t>(i), -1, inputs[i].lead(), t.degree(inputs[i].lead())});
  if (pairs.empty()) throw Error(ErrorCode::ZeroIdealInput);

  Result res;
  const bool tracing = cfg.trace && cfg.la == LinearAlgebra::Exact;
  Trace trace;
  trace.nvars = t.nvars();
  trace.ninputs = inputs.size();
  std::mt19937_64 rng(cfg.seed);
  std::vector<BasisEntry> basis;

  while (!pairs.empty()) {
    std::vector<SPair> L = select_pairs(pairs);
    MacaulayMatrix M = symbolic_preprocessing(L, basis, inputs, t);
    ++res.stats.rounds;
    res.stats.rows += M.pivots.size() + M.todo.size();
    res.stats.max_columns = std::max<uint64_t>(res.stats.max_columns, M.columns.size());

    auto t0 = std::chrono::steady_clock::now();
    EliminationResult er = cfg.la == LinearAlgebra::Exact
                               ? exact_elimination(M, m, cfg.dense_threshold)
                               : probabilistic_elimination(M, cfg.block_size, rng, m, cfg.zero_confirmations,
                                                           cfg.dense_threshold);
    res.stats.la_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.stats.zero_reductions += er.zero_reductions;

    if (tracing) {
      TraceRound tr;
      std::vector<bool> need = needed_reducers(M, er.todo_index);
      for (size_t k = 0; k < M.pivots.size(); ++k)
        if (need[k]) tr.reducers.push_back(to_trace_row(M.pivots[k].src, t));
      for (size_t q = 0; q < er.todo_index.size(); ++q) {
        tr.todo.push_back(to_trace_row(M.todo[er.todo_index[q]].src, t));
        tr.new_leads.push_back(t.exponents(er.rows[q].lead()));
      }
      if (!tr.todo.empty()) trace.rounds.push_back(std::move(tr));
    }

    // Decreasing leads: a later element never divides an earlier one's lead.
    std::sort(er.rows.begin(), er.rows.end(),
              [&](const SparsePolynomial& a, const SparsePolynomial& b) { return t.cmp(a.lead(), b.lead()) > 0; });
    for (auto& h : er.rows) {
      basis.push_back({std::move(h), false});
      update_pairs(pairs, basis, basis.size() - 1, t);
    }
  }

  std::vector<uint32_t> keep;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].redundant) keep.push_back(static_cast<uint32_t>(i));
  std::sort(keep.begin(), keep.end(),
            [&](uint32_t a, uint32_t b) { return t.cmp(basis[a].poly.lead(), basis[b].poly.lead()) < 0; });
  std::vector<SparsePolynomial> elems;
  for (auto& e : basis) elems.push_back(std::move(e.poly));

  res.basis.table = table;
  res.basis.modulus = m;
  res.basis.elements = finalize(elems, keep, t, m);
  res.basis.reduced = true;
  if (tracing) {
    trace.final_indices = keep;
    for (uint32_t i : keep) trace.final_leads.push_back(t.exponents(elems[i].lead()));
    res.trace = std::move(trace);
  }
  return res;
}

GroebnerBasis trace_apply(const Trace& trace, const std::vector<SparsePolynomial>& F,
                          std::shared_ptr<MonomialTable> table, const Modulus& m, Stats* stats) {
  MonomialTable& t = *table;
  if (F.size() != trace.ninputs || t.nvars() != trace.nvars) throw Error(ErrorCode::BadPrime);
  const std::vector<SparsePolynomial> inputs = monic_inputs(F, m);
  std::vector<SparsePolynomial> basis;
  detail::MatrixBuilder B;

  auto source = [&](const TraceRow& r) -> const SparsePolynomial& {
    const SparsePolynomial& s = r.from_input ? inputs.at(r.index) : basis.at(r.index);
    if (s.empty()) throw Error(ErrorCode::BadPrime);
    return s;
  };

  for (const TraceRound& round : trace.rounds) {
    B.begin(t);
    std::vector<uint32_t> pivot_rows, todo_rows;
    for (const TraceRow& r : round.reducers) {
      const SparsePolynomial& s = source(r);
      MonomialId mult = t.intern(r.mult);
      pivot_rows.push_back(B.add_row(s, {r.index, r.from_input, mult}));
    }
    for (const TraceRow& r : round.todo) {
      const SparsePolynomial& s = source(r);
      todo_rows.push_back(B.add_row(s, {r.index, r.from_input, t.intern(r.mult)}));
    }
    MacaulayMatrix M;
    B.finish(pivot_rows, todo_rows, M, false);
    for (size_t k = 1; k < M.pivots.size(); ++k)
      if (M.pivots[k].cols[0] == M.pivots[k - 1].cols[0]) throw Error(ErrorCode::BadPrime);

    auto t0 = std::chrono::steady_clock::now();
    EliminationResult er = exact_elimination(M, m);
    if (stats) {
      ++stats->rounds;
      stats->rows += M.pivots.size() + M.todo.size();
      stats->max_columns = std::max<uint64_t>(stats->max_columns, M.columns.size());
      stats->la_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    if (er.rows.size() != round.todo.size()) throw Error(ErrorCode::BadPrime);
    for (size_t q = 0; q < er.rows.size(); ++q)
      if (t.exponents(er.rows[q].lead()) != round.new_leads[q]) throw Error(ErrorCode::BadPrime);
    std::sort(er.rows.begin(), er.rows.end(),
              [&](const SparsePolynomial& a, const SparsePolynomial& b) { return t.cmp(a.lead(), b.lead()) > 0; });
    for (auto& h : er.rows) basis.push_back(std::move(h));
  }

  for (size_t k = 0; k < trace.final_indices.size(); ++k)
    if (trace.final_indices[k] >= basis.size() || t.exponents(basis[trace.final_indices[k]].lead()) != trace.final_leads[k])
      throw Error(ErrorCode::BadPrime);

  GroebnerBasis G;
  G.table = table;
  G.modulus = m;
  G.elements = finalize(basis, trace.final_indices, t, m);
  G.reduced = true;
  return G;
}

}  // namespace zds::f4
