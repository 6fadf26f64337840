#pragma once

#include <cstddef>
#include <functional>

namespace dpa {

// Worker count: DPA_THREADS if set and positive, otherwise hardware concurrency.
unsigned worker_count();

// Calls fn(i) for i in [0, n). Each index is handled by exactly one worker, so
// results written per index are independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace dpa
