#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shiftdc {

/// Execution policy for the index-parallel verification kernels. Serial is
/// the reference path; both must produce identical results.
enum class Exec { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0)
    omp_set_num_threads(n);
#else
  (void)n;
#endif
}

/// Runs body(i) for i in [0, n). Exceptions thrown by any iteration are
/// rethrown after the loop, lowest index first.
template <typename Body> void for_each_index(Exec exec, std::size_t n, Body &&body) {
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

/// Maps body over [0, n) into a vector; result order is index order.
template <typename T, typename Body> std::vector<T> map_indices(Exec exec, std::size_t n, Body &&body) {
  std::vector<T> out(n);
  for_each_index(exec, n, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

} // namespace shiftdc
