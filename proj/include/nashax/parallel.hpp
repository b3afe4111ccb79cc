// Copyright 2026 The nashax Authors
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


#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace nashax {

// Runs fn(k) for every k in [0, count) on up to `jobs` threads. Work is
// handed out through a shared counter. The first exception thrown by any
// worker (lowest k) is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_at = count;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (k < error_at) {
          error_at = k;
          error = std::current_exception();
        }
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

// Returns the smallest k in [0, count) for which fn(k) yields a value,
// together with that value. Workers skip indices above the best hit so far,
// so the answer equals the sequential scan for any `jobs`. An exception
// counts as a hit: it is rethrown only if a sequential scan would reach it.
template <typename T, typename Fn>
std::optional<std::pair<std::size_t, T>> parallel_first(std::size_t count, std::size_t jobs,
                                                        Fn&& fn) {
  std::vector<std::optional<T>> found(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> best{count};
  parallel_for(count, jobs, [&](std::size_t k) {
    if (k > best.load()) return;
    try {
      found[k] = fn(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
    if (found[k] || errors[k]) {
      std::size_t cur = best.load();
      while (k < cur && !best.compare_exchange_weak(cur, k)) {
      }
    }
  });
  const std::size_t k = best.load();
  if (k == count) return std::nullopt;
  if (errors[k]) std::rethrow_exception(errors[k]);
  return std::make_pair(k, std::move(*found[k]));
}

}  // namespace nashax
