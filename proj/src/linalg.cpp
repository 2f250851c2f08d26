#include "hecke/linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hecke {

Rat SparseVec::at(int i) const {
  for (const auto& [j, v] : e)
    if (j == i) return v;
  return Rat(0);
}

SparseVec axpy(const SparseVec& a, const Rat& c, const SparseVec& b) {
  SparseVec out;
  out.e.reserve(a.e.size() + b.e.size());
  size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      out.e.push_back(a.e[i++]);
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      Rat v = c * b.e[j].second;
      if (v != 0) out.e.emplace_back(b.e[j].first, std::move(v));
      ++j;
    } else {
      Rat v = a.e[i].second + c * b.e[j].second;
      if (v != 0) out.e.emplace_back(a.e[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b) { return axpy(a, Rat(1), b); }

SparseVec scale(const SparseVec& a, const Rat& c) {
  SparseVec out;
  if (c == 0) return out;
  out.e.reserve(a.e.size());
  for (const auto& [i, v] : a.e) out.e.emplace_back(i, c * v);
  return out;
}

SparseMat SparseMat::zero(int r, int c) {
  SparseMat m;
  m.rows = r;
  m.cols = c;
  m.col.assign(c, {});
  return m;
}

SparseMat SparseMat::identity(int n) {
  SparseMat m = zero(n, n);
  for (int i = 0; i < n; ++i) m.col[i] = SparseVec::unit(i);
  return m;
}

SparseVec mul(const SparseMat& m, const SparseVec& v) {
  SparseVec out;
  for (const auto& [i, c] : v.e) out = axpy(out, c, m.col[i]);
  return out;
}

std::vector<Rat> mul_dense(const SparseMat& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.rows, Rat(0));
  for (int c = 0; c < m.cols; ++c) {
    if (v[c] == 0) continue;
    for (const auto& [i, x] : m.col[c].e) out[i] += v[c] * x;
  }
  return out;
}

SparseMat mul_serial(const SparseMat& a, const SparseMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mul: shape mismatch");
  SparseMat out = SparseMat::zero(a.rows, b.cols);
  for (int c = 0; c < b.cols; ++c) out.col[c] = mul(a, b.col[c]);
  return out;
}

SparseMat mul(const SparseMat& a, const SparseMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mul: shape mismatch");
  SparseMat out = SparseMat::zero(a.rows, b.cols);
#pragma omp parallel for schedule(dynamic, 8)
  for (int c = 0; c < b.cols; ++c) out.col[c] = mul(a, b.col[c]);
  return out;
}

SparseMat add(const SparseMat& a, const SparseMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("add: shape mismatch");
  SparseMat out = SparseMat::zero(a.rows, a.cols);
  for (int c = 0; c < a.cols; ++c) out.col[c] = add(a.col[c], b.col[c]);
  return out;
}

SparseMat sub(const SparseMat& a, const SparseMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("sub: shape mismatch");
  SparseMat out = SparseMat::zero(a.rows, a.cols);
  for (int c = 0; c < a.cols; ++c) out.col[c] = axpy(a.col[c], Rat(-1), b.col[c]);
  return out;
}

SparseMat transpose(const SparseMat& a) {
  SparseMat out = SparseMat::zero(a.cols, a.rows);
  for (int c = 0; c < a.cols; ++c)
    for (const auto& [r, v] : a.col[c].e) out.col[r].e.emplace_back(c, v);
  return out;
}

bool is_zero(const SparseMat& a) {
  for (const auto& c : a.col)
    if (!c.zero()) return false;
  return true;
}

std::vector<SparseVec> to_rows(const SparseMat& a) {
  std::vector<SparseVec> rows(a.rows);
  for (int c = 0; c < a.cols; ++c)
    for (const auto& [r, v] : a.col[c].e) rows[r].e.emplace_back(c, v);
  return rows;
}

SparseMat from_rows(const std::vector<SparseVec>& rows, int rows_n, int cols_n) {
  SparseMat out = SparseMat::zero(rows_n, cols_n);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& [c, v] : rows[r].e) out.col[c].e.emplace_back(r, v);
  return out;
}

namespace {

template <bool Parallel>
std::vector<int> rref_impl(std::vector<SparseVec>& rows) {
  std::vector<int> pivots;
  size_t done = 0;  // rows 0..done-1 hold pivots
  for (;;) {
    // leftmost column with a nonzero entry in the remaining rows,
    // first such row
    int pcol = -1;
    size_t prow = 0;
    for (size_t r = done; r < rows.size(); ++r) {
      if (rows[r].zero()) continue;
      int c = rows[r].e.front().first;
      if (pcol == -1 || c < pcol) {
        pcol = c;
        prow = r;
      }
    }
    if (pcol == -1) break;
    std::swap(rows[done], rows[prow]);
    Rat inv = 1 / rows[done].e.front().second;
    if (inv != 1) rows[done] = scale(rows[done], inv);
    const SparseVec& piv = rows[done];
    auto eliminate = [&](size_t r) {
      if (r == done) return;
      Rat c = rows[r].at(pcol);
      if (c != 0) rows[r] = axpy(rows[r], -c, piv);
    };
    if constexpr (Parallel) {
      const int nrows = static_cast<int>(rows.size());
#pragma omp parallel for schedule(dynamic, 64)
      for (int r = 0; r < nrows; ++r) eliminate(static_cast<size_t>(r));
    } else {
      for (size_t r = 0; r < rows.size(); ++r) eliminate(r);
    }
    pivots.push_back(pcol);
    ++done;
  }
  rows.resize(done);
  return pivots;
}

}  // namespace

std::vector<int> rref_serial(std::vector<SparseVec>& rows) {
  return rref_impl<false>(rows);
}

std::vector<int> rref(std::vector<SparseVec>& rows) {
  return rref_impl<true>(rows);
}

int rank(const SparseMat& a) {
  auto rows = to_rows(a);
  return static_cast<int>(rref(rows).size());
}

std::vector<SparseVec> kernel(const SparseMat& a) {
  auto rows = to_rows(a);
  auto pivots = rref(rows);
  std::vector<bool> is_pivot(a.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<SparseVec> out;
  for (int c = 0; c < a.cols; ++c) {
    if (is_pivot[c]) continue;
    SparseVec v;
    // entries: x_c = 1, x_{pivot_k} = -rows[k][c]
    std::vector<std::pair<int, Rat>> ent;
    ent.emplace_back(c, Rat(1));
    for (size_t k = 0; k < pivots.size(); ++k) {
      Rat x = rows[k].at(c);
      if (x != 0) ent.emplace_back(pivots[k], -x);
    }
    std::sort(ent.begin(), ent.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    v.e = std::move(ent);
    out.push_back(std::move(v));
  }
  return out;
}

Span::Span(std::vector<SparseVec> vecs, int ncols_) {
  ncols = ncols_;
  rows = std::move(vecs);
  pivots = rref(rows);
}

SparseVec Span::reduce(const SparseVec& v) const {
  SparseVec r = v;
  for (size_t k = 0; k < rows.size(); ++k) {
    Rat c = r.at(pivots[k]);
    if (c != 0) r = axpy(r, -c, rows[k]);
  }
  return r;
}

bool Span::contains(const SparseVec& v) const { return reduce(v).zero(); }

std::vector<Rat> Span::coordinates(const SparseVec& v) const {
  std::vector<Rat> out(rows.size(), Rat(0));
  SparseVec r = v;
  for (size_t k = 0; k < rows.size(); ++k) {
    Rat c = r.at(pivots[k]);
    if (c != 0) {
      r = axpy(r, -c, rows[k]);
      out[k] = c;
    }
  }
  if (!r.zero()) throw std::invalid_argument("coordinates: vector not in span");
  return out;
}

bool subspace_leq(const Span& a, const Span& b) {
  for (const auto& r : a.rows)
    if (!b.contains(r)) return false;
  return true;
}

Span span_sum(const Span& a, const Span& b) {
  std::vector<SparseVec> rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return Span(std::move(rows), a.ncols);
}

std::string to_string(const SparseMat& a) {
  std::ostringstream os;
  auto rows = to_rows(a);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) {
      Rat v = r < static_cast<int>(rows.size()) ? rows[r].at(c) : Rat(0);
      os << v.get_str() << (c + 1 == a.cols ? "" : " ");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hecke
