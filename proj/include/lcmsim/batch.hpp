#pragma once

#include <exception>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcmsim::batch {

/// Threads the parallel path will use (1 without OpenMP).
int worker_count();

/// Serial reference: runs fn(0..n-1) in order.
template <typename F>
auto map_serial(int n, F&& fn) -> std::vector<decltype(fn(0))> {
  std::vector<decltype(fn(0))> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

/// OpenMP sweep over independent deterministic jobs. Each job depends
/// only on its index, so the result vector is identical to the serial
/// reference; the first exception, if any, is rethrown after the loop.
template <typename F>
auto map_parallel(int n, F&& fn) -> std::vector<decltype(fn(0))> {
  std::vector<decltype(fn(0))> out(n);
  std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      out[i] = fn(i);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

template <typename F>
auto map_indexed(int n, F&& fn, bool parallel) -> std::vector<decltype(fn(0))> {
  return parallel ? map_parallel(n, std::forward<F>(fn)) : map_serial(n, std::forward<F>(fn));
}

}  // namespace lcmsim::batch
