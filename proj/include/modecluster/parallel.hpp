#pragma once

#include <cstddef>
#include <functional>

namespace modecluster {

// Resolves a thread-count request: 0 means "use MODECLUSTER_THREADS if
// set, else hardware concurrency". Always returns at least 1.
int effective_threads(int requested);

// Runs fn(i) for i in [0, count) on up to `threads` workers using a
// static block partition. Each index is visited exactly once, so results
// written to per-index slots do not depend on scheduling. The first
// exception thrown by any worker is rethrown on the caller's thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

}  // namespace modecluster
