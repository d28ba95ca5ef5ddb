// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace galmod {

// Serial is the reference path; Parallel uses OpenMP and must produce
// identical results.
enum class Exec { Serial, Parallel };

int max_threads();

// out[i] = fn(i) for i in [0, n).  Result order never depends on scheduling.
// The first exception thrown by any iteration is rethrown after the loop.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Exec exec, Fn&& fn) {
  std::vector<T> out(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr err;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(galmod_parallel_map_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace galmod
