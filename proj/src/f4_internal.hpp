#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "zdsolve/f4.hpp"

namespace zds::f4::detail {

struct PendingRow {
  RowSource src;
  std::vector<MonomialId> mons;
  const Residue* vals;
};

// Symbolic preprocessing state; per-round stamps avoid clearing marks.
struct MatrixBuilder {
  MonomialTable* table = nullptr;
  uint32_t stamp = 0;
  std::vector<uint32_t> mark;
  std::vector<uint32_t> pivot_mark;
  std::vector<uint32_t> col_of;
  std::vector<MonomialId> monomials;
  std::vector<PendingRow> rows;

  void begin(MonomialTable& t);
  void ensure();
  void touch(MonomialId m);
  uint32_t add_row(const SparsePolynomial& poly, RowSource src);
  void set_pivot(MonomialId lead);
  bool has_pivot(MonomialId m) const;
  // Adds a reducer for every monomial without a pivot that some lead divides.
  void close(const std::vector<BasisEntry>& basis, std::vector<uint32_t>& pivot_rows);
  void finish(const std::vector<uint32_t>& pivot_rows, const std::vector<uint32_t>& todo_rows, MacaulayMatrix& M,
              bool sort_todo = true);
};

struct Pivot {
  bool present = false;
  bool dense = false;
  const uint32_t* cols = nullptr;  // sparse only
  const Residue* vals = nullptr;   // dense: indexed from the lead column
  uint32_t len = 0;
};

struct Eliminator {
  struct Owned {
    std::vector<uint32_t> cols;
    std::vector<Residue> vals;
  };
  const Modulus* m = nullptr;
  uint32_t p = 0;
  int64_t p2 = 0;
  double dense_threshold = 0.25;
  size_t n = 0;
  std::vector<Pivot> pivot;
  std::deque<Owned> owned;
  std::vector<int64_t> buf;

  void reset(size_t ncols, const Modulus& mod, double dense_thr);
  void add_borrowed(const MacaulayMatrix::Row& r);
  size_t reduce(size_t start, size_t skip = SIZE_MAX);
  void extract(size_t first, SparsePolynomial& out, const std::vector<MonomialId>& columns, bool monic);
  void store_new(size_t lead, const SparsePolynomial& row, const std::vector<MonomialId>& columns);
};

}  // namespace zds::f4::detail
