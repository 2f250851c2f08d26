#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hecke {

using Rat = mpq_class;

/// Sparse vector: (index, value) pairs sorted by index, values nonzero.
struct SparseVec {
  std::vector<std::pair<int, Rat>> e;

  bool zero() const { return e.empty(); }
  static SparseVec unit(int i) { return SparseVec{{{i, Rat(1)}}}; }
  Rat at(int i) const;
  bool operator==(const SparseVec&) const = default;
};

SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec axpy(const SparseVec& a, const Rat& c, const SparseVec& b);  // a + c*b
SparseVec scale(const SparseVec& a, const Rat& c);

/// Sparse matrix, column major: col[c] is the image of basis vector c.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<SparseVec> col;

  static SparseMat zero(int r, int c);
  static SparseMat identity(int n);
  bool operator==(const SparseMat&) const = default;
};

SparseVec mul(const SparseMat& m, const SparseVec& v);
std::vector<Rat> mul_dense(const SparseMat& m, const std::vector<Rat>& v);

/// Matrix product, serial reference.
SparseMat mul_serial(const SparseMat& a, const SparseMat& b);
/// Matrix product, OpenMP-parallel over columns; identical output.
SparseMat mul(const SparseMat& a, const SparseMat& b);

SparseMat add(const SparseMat& a, const SparseMat& b);
SparseMat sub(const SparseMat& a, const SparseMat& b);
SparseMat transpose(const SparseMat& a);
bool is_zero(const SparseMat& a);

/// Columns of a as rows (row-major view used to assemble systems).
std::vector<SparseVec> to_rows(const SparseMat& a);
SparseMat from_rows(const std::vector<SparseVec>& rows, int rows_n, int cols_n);

/// Reduced row echelon form, deterministic: leftmost pivot column, first
/// nonzero row; pivots normalized to 1 and eliminated everywhere else.
/// Returns pivot columns. Zero rows are removed.
std::vector<int> rref_serial(std::vector<SparseVec>& rows);
/// Same result, elimination parallelized over rows with OpenMP.
std::vector<int> rref(std::vector<SparseVec>& rows);

int rank(const SparseMat& a);

/// Kernel of the map x -> a x: basis of solutions, one per free column,
/// in increasing free-column order (deterministic).
std::vector<SparseVec> kernel(const SparseMat& a);

/// Row space of a set of vectors in canonical (RREF) form.
struct Span {
  int ncols = 0;
  std::vector<SparseVec> rows;  // RREF rows
  std::vector<int> pivots;

  Span() = default;
  Span(std::vector<SparseVec> vecs, int ncols);
  int dim() const { return static_cast<int>(rows.size()); }
  bool contains(const SparseVec& v) const;
  /// Reduce v modulo the span (residual after eliminating pivots).
  SparseVec reduce(const SparseVec& v) const;
  /// Coordinates of v in the RREF basis; requires contains(v).
  std::vector<Rat> coordinates(const SparseVec& v) const;
  bool operator==(const Span&) const = default;
};

bool subspace_leq(const Span& a, const Span& b);
Span span_sum(const Span& a, const Span& b);

std::string to_string(const SparseMat& a);

}  // namespace hecke
