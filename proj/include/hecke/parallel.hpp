#pragma once

#include <omp.h>

namespace hecke {

/// Runs fn(i) for i in [0, count). jobs <= 1 keeps the plain serial loop
/// (the reference path used by tests); jobs > 1 distributes iterations over
/// an OpenMP pool of that size. Iterations must be independent.
template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int i = 0; i < count; ++i) fn(i);
}

}  // namespace hecke
