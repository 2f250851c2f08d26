// Serial vs OpenMP timings for the exact-arithmetic kernels and for the
// per-shape verification sweep. Outputs a small table; results must agree
// bit for bit between the two paths.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "hecke/verify.hpp"

using namespace hecke;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

SparseMat random_system(int rows, int cols, int nnz, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> rd(0, rows - 1);
  std::uniform_int_distribution<int> vd(-1, 1);
  SparseMat m = SparseMat::zero(rows, cols);
  for (int c = 0; c < cols; ++c) {
    std::map<int, Rat> col;
    for (int k = 0; k < nnz; ++k) col[rd(rng)] += vd(rng);
    for (auto& [r, v] : col)
      if (v != 0) m.col[c].e.emplace_back(r, v);
  }
  return m;
}

template <typename F>
double timeit(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds(t0, std::chrono::steady_clock::now());
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial(s)", "openmp(s)", "speedup");

  {
    // dense-ish exact products on a projective action algebra
    auto P = projective_module(Composition{2, 2, 2, 1});
    auto a = P.rep->act[2];
    SparseMat acc;
    double ts = timeit([&] {
      acc = a;
      for (int k = 0; k < 40; ++k) acc = mul_serial(acc, a);
    });
    SparseMat acc2;
    double tp = timeit([&] {
      acc2 = a;
      for (int k = 0; k < 40; ++k) acc2 = mul(acc2, a);
    });
    if (!(acc == acc2)) {
      std::printf("matmul mismatch!\n");
      return 1;
    }
    std::printf("%-34s %10.3f %10.3f %7.2fx\n", "sparse matmul (P_(2,2,2,1))", ts,
                tp, ts / tp);
  }

  {
    auto m = random_system(1800, 1400, 4, 42);
    auto rows1 = to_rows(m);
    auto rows2 = to_rows(m);
    double ts = timeit([&] { rref_serial(rows1); });
    double tp = timeit([&] { rref(rows2); });
    if (rows1 != rows2) {
      std::printf("rref mismatch!\n");
      return 1;
    }
    std::printf("%-34s %10.3f %10.3f %7.2fx\n", "rref (1800x1400 random)", ts, tp,
                ts / tp);
  }

  {
    double ts = timeit([&] { suite_projective(6, 1); });
    double tp = timeit([&] { suite_projective(6, omp_get_max_threads()); });
    std::printf("%-34s %10.3f %10.3f %7.2fx\n", "projective sweep n<=6", ts, tp,
                ts / tp);
  }

  {
    double ts = timeit([&] { suite_injective(6, 1); });
    double tp = timeit([&] { suite_injective(6, omp_get_max_threads()); });
    std::printf("%-34s %10.3f %10.3f %7.2fx\n", "injective sweep n<=6", ts, tp,
                ts / tp);
  }

  return 0;
}
