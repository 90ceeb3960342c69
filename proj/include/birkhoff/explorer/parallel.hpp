// Copyright 2026 The birkhoff-lab developers
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
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace birkhoff {

// Worker count: hardware concurrency capped by BIRKHOFF_LAB_THREADS.
inline int thread_budget() {
  int budget = static_cast<int>(std::thread::hardware_concurrency());
  if (budget < 1) budget = 1;
  if (const char* env = std::getenv("BIRKHOFF_LAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < budget) budget = cap;
  }
  return budget;
}

// Runs f(i) for i in [0, n). Tasks must be independent and write only to
// their own index; results are then identical for any worker count.
template <typename F>
void parallel_for_index(int n, F&& f) {
  const int workers = std::min(thread_budget(), n < 1 ? 1 : n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next(0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        f(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace birkhoff
