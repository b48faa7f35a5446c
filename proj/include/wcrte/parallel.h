// Copyright 2026 The wcrte Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WCRTE_PARALLEL_H_
#define WCRTE_PARALLEL_H_

#include <cstddef>
#include <cstdint>
#include <exception>

#include <omp.h>

namespace wcrte {

// Number of worker threads; 0 selects the OpenMP default (all cores).
struct Threads {
  int count = 0;
};

// Runs fn(i) for i in [0, count) on an OpenMP team. fn must only write to
// storage owned by index i; callers reduce the results afterwards in index
// order, so the outcome never depends on the team size. The exception thrown
// at the lowest failing index is rethrown after the loop.
template <typename Fn>
void parallel_for(std::size_t count, Threads threads, Fn&& fn) {
  const int team = threads.count > 0 ? threads.count : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(count);
  std::exception_ptr first_error;
  std::int64_t first_index = n;
#pragma omp parallel for schedule(static) num_threads(team)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(wcrte_parallel_for_error)
      if (i < first_index) {
        first_index = i;
        first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

// Serial reference driver with the same contract as parallel_for.
template <typename Fn>
void serial_for(std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace wcrte

#endif  // WCRTE_PARALLEL_H_
