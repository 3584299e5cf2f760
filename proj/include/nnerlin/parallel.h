// Copyright 2026 The nner-lin Authors.
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

#ifndef NNERLIN_PARALLEL_H_
#define NNERLIN_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace nnerlin {

// Worker count from NNER_LIN_THREADS; unset or 0 means one per core.
inline int ThreadsFromEnvironment() {
  int threads = 0;
  if (const char *value = std::getenv("NNER_LIN_THREADS")) {
    threads = std::atoi(value);
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::max(threads, 1);
}

// Applies |fn| to 0..count-1 on up to |threads| workers and returns the
// results in index order. If calls throw, the exception of the lowest index
// is rethrown, so failures are reported deterministically.
template <typename Result, typename Fn>
std::vector<Result> ParallelMap(size_t count, int threads, Fn fn) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  size_t workers = std::min<size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  for (const auto &error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

}  // namespace nnerlin

#endif  // NNERLIN_PARALLEL_H_
