// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_THREADS_HPP
#define PRYMRANK_THREADS_HPP

#include <functional>

namespace prymrank {

/// Worker count: PRYM_RANK_THREADS if set and positive, hardware
/// concurrency otherwise (0 or unset means auto). Re-read on every call.
int thread_budget();

/// Runs fn(0..count-1), splitting indices across the thread budget.
/// Each index must write only to its own output slot; results are then
/// independent of the parallel schedule.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace prymrank

#endif
