#pragma once

#include <cstddef>
#include <functional>

namespace latforge {

// Worker-pool cap: LATFORGE_THREADS if set to a positive integer, otherwise
// the number of logical CPUs. Read on every call.
unsigned worker_count();

// Runs task(i) for i in [0, count) on up to worker_count() threads. Tasks must
// write only to their own result slot. If tasks throw, one of the exceptions
// is rethrown after all workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace latforge
