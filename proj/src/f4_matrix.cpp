#include <algorithm>
#include <numeric>

#include "zdsolve/f4.hpp"
#include "zdsolve/kernels.hpp"
#include "f4_internal.hpp"

namespace zds::f4 {

namespace detail {

void MatrixBuilder::begin(MonomialTable& t) {
  table = &t;
  ++stamp;
  monomials.clear();
  rows.clear();
  ensure();
}

void MatrixBuilder::ensure() {
  if (mark.size() < table->size()) {
    mark.resize(table->size() + table->size() / 2 + 16, 0);
    pivot_mark.resize(mark.size(), 0);
  }
}

void MatrixBuilder::touch(MonomialId m) {
  if (m >= mark.size()) ensure();
  if (mark[m] != stamp) {
    mark[m] = stamp;
    monomials.push_back(m);
  }
}

uint32_t MatrixBuilder::add_row(const SparsePolynomial& poly, RowSource src) {
  PendingRow r;
  r.src = src;
  r.vals = poly.coeffs.data();
  r.mons.resize(poly.size());
  MonomialTable& t = *table;
  if (src.mult == t.one()) {
    std::copy(poly.mons.begin(), poly.mons.end(), r.mons.begin());
  } else {
    for (size_t k = 0; k < poly.size(); ++k) r.mons[k] = t.mul(src.mult, poly.mons[k]);
  }
  ensure();
  for (MonomialId m : r.mons) touch(m);
  rows.push_back(std::move(r));
  return static_cast<uint32_t>(rows.size() - 1);
}

void MatrixBuilder::set_pivot(MonomialId lead) {
  ensure();
  pivot_mark[lead] = stamp;
}

bool MatrixBuilder::has_pivot(MonomialId m) const { return m < pivot_mark.size() && pivot_mark[m] == stamp; }

void MatrixBuilder::close(const std::vector<BasisEntry>& basis, std::vector<uint32_t>& pivot_rows) {
  const MonomialTable& t = *table;
  for (size_t k = 0; k < monomials.size(); ++k) {
    MonomialId m = monomials[k];
    if (has_pivot(m)) continue;
    int32_t best = -1;
    size_t best_len = 0;
    for (size_t g = 0; g < basis.size(); ++g) {
      if (basis[g].redundant) continue;
      const SparsePolynomial& gp = basis[g].poly;
      if (!t.divides(gp.lead(), m)) continue;
      if (best < 0 || gp.size() < best_len) {
        best = static_cast<int32_t>(g);
        best_len = gp.size();
      }
    }
    if (best < 0) continue;
    const SparsePolynomial& gp = basis[best].poly;
    MonomialId mult = table->quotient(m, gp.lead());
    set_pivot(m);
    pivot_rows.push_back(add_row(gp, {static_cast<uint32_t>(best), false, mult}));
  }
}

void MatrixBuilder::finish(const std::vector<uint32_t>& pivot_rows, const std::vector<uint32_t>& todo_rows,
                           MacaulayMatrix& M, bool sort_todo) {
  const MonomialTable& t = *table;
  M.columns = monomials;
  std::sort(M.columns.begin(), M.columns.end(), [&](MonomialId a, MonomialId b) { return t.cmp(a, b) > 0; });
  col_of.resize(mark.size());
  for (size_t c = 0; c < M.columns.size(); ++c) col_of[M.columns[c]] = static_cast<uint32_t>(c);
  auto convert = [&](uint32_t r) {
    MacaulayMatrix::Row row;
    row.src = rows[r].src;
    row.vals = rows[r].vals;
    row.cols.resize(rows[r].mons.size());
    for (size_t k = 0; k < row.cols.size(); ++k) row.cols[k] = col_of[rows[r].mons[k]];
    return row;
  };
  M.pivots.clear();
  M.todo.clear();
  for (uint32_t r : pivot_rows) M.pivots.push_back(convert(r));
  for (uint32_t r : todo_rows) M.todo.push_back(convert(r));
  std::sort(M.pivots.begin(), M.pivots.end(),
            [](const MacaulayMatrix::Row& a, const MacaulayMatrix::Row& b) { return a.cols[0] < b.cols[0]; });
  if (!sort_todo) return;
  std::stable_sort(M.todo.begin(), M.todo.end(), [](const MacaulayMatrix::Row& a, const MacaulayMatrix::Row& b) {
    if (a.cols[0] != b.cols[0]) return a.cols[0] < b.cols[0];
    return a.cols.size() < b.cols.size();
  });
}

}  // namespace detail

MacaulayMatrix symbolic_preprocessing(const std::vector<SPair>& L, const std::vector<BasisEntry>& basis,
                                      const std::vector<SparsePolynomial>& inputs, MonomialTable& t) {
  thread_local detail::MatrixBuilder B;
  B.begin(t);
  std::vector<uint32_t> pivot_rows, todo_rows;

  // Regular pair rows grouped by lcm; each distinct (element, multiplier) once.
  struct Half {
    MonomialId lcm;
    uint32_t g;
  };
  std::vector<Half> halves;
  for (const SPair& p : L) {
    if (p.j < 0) {
      const SparsePolynomial& f = inputs[p.i];
      todo_rows.push_back(B.add_row(f, {static_cast<uint32_t>(p.i), true, t.one()}));
      continue;
    }
    halves.push_back({p.lcm, static_cast<uint32_t>(p.i)});
    halves.push_back({p.lcm, static_cast<uint32_t>(p.j)});
  }
  std::sort(halves.begin(), halves.end(), [](const Half& a, const Half& b) {
    return a.lcm != b.lcm ? a.lcm < b.lcm : a.g < b.g;
  });
  halves.erase(std::unique(halves.begin(), halves.end(),
                           [](const Half& a, const Half& b) { return a.lcm == b.lcm && a.g == b.g; }),
               halves.end());
  for (size_t s = 0; s < halves.size();) {
    size_t e = s;
    while (e < halves.size() && halves[e].lcm == halves[s].lcm) ++e;
    // Sparsest generator is the pivot, ties to the lower index.
    size_t best = s;
    for (size_t k = s + 1; k < e; ++k)
      if (basis[halves[k].g].poly.size() < basis[halves[best].g].poly.size()) best = k;
    for (size_t k = s; k < e; ++k) {
      const SparsePolynomial& gp = basis[halves[k].g].poly;
      MonomialId mult = t.quotient(halves[k].lcm, gp.lead());
      uint32_t r = B.add_row(gp, {halves[k].g, false, mult});
      if (k == best) {
        B.set_pivot(halves[k].lcm);
        pivot_rows.push_back(r);
      } else {
        todo_rows.push_back(r);
      }
    }
    s = e;
  }

  B.close(basis, pivot_rows);
  MacaulayMatrix M;
  B.finish(pivot_rows, todo_rows, M);
  return M;
}

namespace detail {

void Eliminator::reset(size_t ncols, const Modulus& mod, double dense_thr) {
  m = &mod;
  p = mod.p();
  p2 = static_cast<int64_t>(mod.p2());
  dense_threshold = dense_thr;
  n = ncols;
  pivot.assign(ncols, Pivot{});
  owned.clear();
  buf.assign(ncols, 0);
}

void Eliminator::add_borrowed(const MacaulayMatrix::Row& r) {
  Pivot& pv = pivot[r.cols[0]];
  pv.present = true;
  pv.dense = false;
  pv.cols = r.cols.data();
  pv.vals = r.vals;
  pv.len = static_cast<uint32_t>(r.cols.size());
}

// Reduces buf over [start, n). Returns the first column left nonzero, or n.
size_t Eliminator::reduce(size_t start, size_t skip) {
  size_t first = n;
  int64_t* b = buf.data();
  for (size_t c = start; c < n; ++c) {
    int64_t x = b[c];
    if (x == 0) continue;
    uint32_t v = static_cast<uint32_t>(static_cast<uint64_t>(x) % p);
    if (v == 0) {
      b[c] = 0;
      continue;
    }
    const Pivot& pv = pivot[c];
    if (!pv.present || c == skip) {
      b[c] = v;
      if (first == n) first = c;
      continue;
    }
    if (pv.dense) {
      kernels::sub_mul(b + c, v, pv.vals, n - c, static_cast<uint64_t>(p2));
    } else {
      kernels::sub_mul_sparse(b, v, pv.cols, pv.vals, pv.len, static_cast<uint64_t>(p2));
    }
    b[c] = 0;
  }
  return first;
}

void Eliminator::extract(size_t first, SparsePolynomial& out, const std::vector<MonomialId>& columns,
                         bool monic) {
  out.mons.clear();
  out.coeffs.clear();
  for (size_t c = first; c < n; ++c) {
    int64_t x = buf[c];
    if (x == 0) continue;
    uint32_t v = static_cast<uint32_t>(static_cast<uint64_t>(x) % p);
    buf[c] = 0;
    if (v == 0) continue;
    out.mons.push_back(columns[c]);
    out.coeffs.push_back(v);
  }
  if (monic) make_monic(out, *m);
}

void Eliminator::store_new(size_t lead, const SparsePolynomial& row, const std::vector<MonomialId>& columns) {
  // row's monomials map back to columns lead.. in order; rebuild column indices.
  owned.emplace_back();
  Owned& o = owned.back();
  const size_t span = n - lead;
  std::vector<uint32_t> cols;
  cols.reserve(row.size());
  size_t c = lead;
  for (MonomialId mm : row.mons) {
    while (columns[c] != mm) ++c;
    cols.push_back(static_cast<uint32_t>(c));
  }
  Pivot& pv = pivot[lead];
  pv.present = true;
  if (static_cast<double>(row.size()) > dense_threshold * static_cast<double>(span)) {
    o.vals.assign(span, 0);
    for (size_t k = 0; k < cols.size(); ++k) o.vals[cols[k] - lead] = row.coeffs[k];
    pv.dense = true;
    pv.vals = o.vals.data();
    pv.cols = nullptr;
    pv.len = static_cast<uint32_t>(span);
  } else {
    o.cols = std::move(cols);
    o.vals = row.coeffs;
    pv.dense = false;
    pv.cols = o.cols.data();
    pv.vals = o.vals.data();
    pv.len = static_cast<uint32_t>(o.cols.size());
  }
}

}  // namespace detail

EliminationResult exact_elimination(const MacaulayMatrix& M, const Modulus& m, double dense_threshold) {
  EliminationResult res;
  detail::Eliminator E;
  E.reset(M.columns.size(), m, dense_threshold);
  for (const auto& r : M.pivots) E.add_borrowed(r);
  SparsePolynomial row;
  for (size_t k = 0; k < M.todo.size(); ++k) {
    const auto& r = M.todo[k];
    for (size_t q = 0; q < r.cols.size(); ++q) E.buf[r.cols[q]] = r.vals[q];
    size_t first = E.reduce(r.cols[0]);
    if (first == E.n) {
      ++res.zero_reductions;
      continue;
    }
    E.extract(first, row, M.columns, true);
    E.store_new(first, row, M.columns);
    res.rows.push_back(row);
    res.todo_index.push_back(static_cast<uint32_t>(k));
  }
  return res;
}

EliminationResult probabilistic_elimination(const MacaulayMatrix& M, uint32_t block_size, std::mt19937_64& rng,
                                            const Modulus& m, uint32_t zero_confirmations,
                                            double dense_threshold) {
  if (block_size == 0) block_size = 1;
  if (zero_confirmations == 0) zero_confirmations = 1;
  EliminationResult res;
  detail::Eliminator E;
  E.reset(M.columns.size(), m, dense_threshold);
  for (const auto& r : M.pivots) E.add_borrowed(r);
  const uint64_t p2 = m.p2();
  SparsePolynomial row;
  for (size_t s = 0; s < M.todo.size(); s += block_size) {
    const size_t e = std::min(M.todo.size(), s + block_size);
    size_t start = E.n;
    for (size_t k = s; k < e; ++k) start = std::min<size_t>(start, M.todo[k].cols[0]);
    uint32_t zeros = 0;
    for (size_t found = 0; found < e - s;) {
      for (size_t k = s; k < e; ++k) {
        const auto& r = M.todo[k];
        const uint64_t a = 1 + rng() % (m.p() - 1);
        for (size_t q = 0; q < r.cols.size(); ++q) {
          uint64_t x = static_cast<uint64_t>(E.buf[r.cols[q]]) + a * r.vals[q];
          if (x >= p2) x -= p2;
          E.buf[r.cols[q]] = static_cast<int64_t>(x);
        }
      }
      size_t first = E.reduce(start);
      if (first == E.n) {
        ++res.zero_reductions;
        if (++zeros >= zero_confirmations) break;
        continue;
      }
      E.extract(first, row, M.columns, true);
      E.store_new(first, row, M.columns);
      res.rows.push_back(row);
      ++found;
    }
  }
  return res;
}

}  // namespace zds::f4
