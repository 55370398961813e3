// Copyright 2026 The caspr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace caspr {

/// Run fn(i) for i in [0, count) on up to `workers` threads. Results must
/// be written by index so output order never depends on scheduling. If any
/// calls throw, the exception with the smallest index is rethrown, which
/// keeps error reporting deterministic too.
template <typename Fn>
void parallel_for(size_t count, int workers, Fn&& fn) {
  if (count == 0) return;
  size_t nworkers = workers < 1 ? 1 : static_cast<size_t>(workers);
  if (nworkers > count) nworkers = count;
  if (nworkers == 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::vector<std::exception_ptr> errors(count);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(nworkers);
  for (size_t t = 0; t < nworkers; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();

  for (size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
}

}  // namespace caspr
