// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/threads.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace prymrank {

int thread_budget() {
  int budget = 0;
  if (const char* env = std::getenv("PRYM_RANK_THREADS")) {
    std::from_chars(env, env + std::strlen(env), budget);
  }
  if (budget <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    budget = hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
  }
  return budget;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  const int workers = std::min(thread_budget(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace prymrank
