#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "hecke/linalg.hpp"

using namespace hecke;

namespace {

SparseMat random_sparse(int rows, int cols, int nnz_per_col, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> rd(0, rows - 1);
  std::uniform_int_distribution<int> vd(-2, 2);
  SparseMat m = SparseMat::zero(rows, cols);
  for (int c = 0; c < cols; ++c) {
    std::map<int, Rat> col;
    for (int k = 0; k < nnz_per_col; ++k) {
      int v = vd(rng);
      if (v) col[rd(rng)] += v;
    }
    for (auto& [r, v] : col)
      if (v != 0) m.col[c].e.emplace_back(r, v);
  }
  return m;
}

}  // namespace

TEST_CASE("sparse vector arithmetic") {
  SparseVec a{{{0, Rat(1)}, {2, Rat(3)}}};
  SparseVec b{{{1, Rat(2)}, {2, Rat(-3)}}};
  auto c = add(a, b);
  CHECK(c.at(0) == 1);
  CHECK(c.at(1) == 2);
  CHECK(c.at(2) == 0);
  CHECK(c.e.size() == 2);  // cancelled entry dropped
  auto d = axpy(a, Rat(1, 2), b);
  CHECK(d.at(1) == Rat(1, 2) * 2);
  CHECK(d.at(2) == Rat(3) - Rat(3, 2));
}

TEST_CASE("rref canonical form and determinism") {
  std::vector<SparseVec> rows{
      SparseVec{{{0, Rat(2)}, {1, Rat(4)}}},
      SparseVec{{{0, Rat(1)}, {1, Rat(2)}, {2, Rat(1)}}},
      SparseVec{{{1, Rat(1)}, {2, Rat(1)}}},
  };
  auto rows2 = rows;
  auto p1 = rref_serial(rows);
  auto p2 = rref(rows2);
  CHECK(p1 == p2);
  CHECK(rows == rows2);
  CHECK(p1 == std::vector<int>{0, 1, 2});
  // pivots normalized and eliminated
  for (size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].at(p1[k]) == 1);
    for (size_t l = 0; l < rows.size(); ++l)
      if (l != k) CHECK(rows[l].at(p1[k]) == 0);
  }
}

TEST_CASE("rref parallel equals serial on random systems") {
  for (unsigned seed = 0; seed < 6; ++seed) {
    auto m = random_sparse(120, 80, 3, seed);
    auto r1 = to_rows(m);
    auto r2 = to_rows(m);
    auto p1 = rref_serial(r1);
    auto p2 = rref(r2);
    CHECK(p1 == p2);
    CHECK(r1 == r2);
  }
}

TEST_CASE("mul parallel equals serial") {
  for (unsigned seed = 0; seed < 4; ++seed) {
    auto a = random_sparse(60, 50, 4, seed);
    auto b = random_sparse(50, 40, 4, seed + 100);
    CHECK(mul(a, b) == mul_serial(a, b));
  }
}

TEST_CASE("kernel and rank") {
  // x + y = 0, y + z = 0 over 3 unknowns: kernel dim 1
  SparseMat m = SparseMat::zero(2, 3);
  m.col[0] = SparseVec{{{0, Rat(1)}}};
  m.col[1] = SparseVec{{{0, Rat(1)}, {1, Rat(1)}}};
  m.col[2] = SparseVec{{{1, Rat(1)}}};
  CHECK(rank(m) == 2);
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  for (const auto& v : k) CHECK(mul(m, v).zero());
  // rank-nullity on random matrices
  for (unsigned seed = 0; seed < 4; ++seed) {
    auto a = random_sparse(30, 45, 3, seed);
    auto ker = kernel(a);
    CHECK(static_cast<int>(ker.size()) + rank(a) == a.cols);
    for (const auto& v : ker) CHECK(mul(a, v).zero());
  }
}

TEST_CASE("span operations") {
  std::vector<SparseVec> vs{SparseVec{{{0, Rat(1)}, {1, Rat(1)}}},
                            SparseVec{{{1, Rat(1)}, {2, Rat(1)}}}};
  Span s(vs, 4);
  CHECK(s.dim() == 2);
  CHECK(s.contains(SparseVec{{{0, Rat(1)}, {2, Rat(-1)}}}));
  CHECK_FALSE(s.contains(SparseVec::unit(0)));
  auto coords = s.coordinates(SparseVec{{{0, Rat(2)}, {1, Rat(2)}}});
  CHECK(coords[0] == 2);
  Span t(std::vector<SparseVec>{SparseVec::unit(3)}, 4);
  auto u = span_sum(s, t);
  CHECK(u.dim() == 3);
  CHECK(subspace_leq(s, u));
  CHECK_FALSE(subspace_leq(u, s));
  // canonical equality: same subspace from different spanning sets
  std::vector<SparseVec> ws{SparseVec{{{0, Rat(2)}, {1, Rat(2)}}},
                            SparseVec{{{0, Rat(1)}, {2, Rat(-1)}}}};
  CHECK(Span(ws, 4) == s);
}

TEST_CASE("transpose and row views") {
  auto a = random_sparse(20, 15, 3, 7);
  auto t = transpose(a);
  CHECK(transpose(t) == a);
  auto rows = to_rows(a);
  CHECK(from_rows(rows, a.rows, a.cols) == a);
}
