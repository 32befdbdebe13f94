#pragma once

#include <cstddef>
#include <functional>

namespace dynfrac {

// Runs body(0..n-1) on up to `threads` workers (0 = hardware concurrency).
// Nested calls from inside a worker run serially. The first exception thrown
// by any task is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace dynfrac
