#pragma once

#include <cstddef>
#include <functional>

namespace hdw {

// Worker-thread count: HDW_THREADS if set, else 1. Can be overridden
// programmatically (tests use this to check partition independence).
int thread_count();
void set_thread_count(int n);

// Runs fn(begin, end) over contiguous chunks of [0, count). Each index must
// write only its own outputs; results are then independent of the partition.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace hdw
