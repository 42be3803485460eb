#pragma once

#include <cstddef>
#include <functional>

namespace ap3 {

// Resolves the worker count: an explicit request wins, otherwise the
// AP3LAB_THREADS environment variable, otherwise the hardware concurrency.
// Always at least 1.
int resolve_thread_count(int requested = 0);

// Runs fn(worker_index) on `workers` std::threads and joins them all.
// Work partitioning and result placement are the caller's job; keeping
// per-worker outputs in preallocated slots makes the reduction
// deterministic regardless of the worker count.
void fan_out(int workers, const std::function<void(int)>& fn);

}  // namespace ap3
