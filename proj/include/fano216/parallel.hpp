#pragma once

#include <cstdlib>
#include <vector>

#ifdef FANO216_HAVE_OPENMP
#include <omp.h>
#endif

namespace fano216 {

// Execution mode for the data-parallel kernels. Every parallel kernel has a
// serial twin; results must be identical rationals either way, so parallel
// maps write into index-addressed slots and reductions run in index order.
enum class Exec { Serial, Parallel };

inline Exec default_exec() {
  if (std::getenv("FANO216_SERIAL")) return Exec::Serial;
#ifdef FANO216_HAVE_OPENMP
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

// Applies fn(i) for i in [0, n), returning results by index.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t n, Exec mode, Fn&& fn) {
  std::vector<T> out(n);
  if (mode == Exec::Parallel) {
#ifdef FANO216_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

// Deterministic combine: left fold in index order.
template <class T>
T sum_in_order(const std::vector<T>& xs, T init) {
  for (const auto& x : xs) init += x;
  return init;
}

}  // namespace fano216
