#pragma once
// Deterministic index-space parallel loop. Results must be written by index;
// the schedule never affects output. ISOGEO4_THREADS caps the worker count
// (0 or unset means auto).

#include <cstddef>
#include <functional>

namespace isogeo4 {

int thread_cap();

// Invokes fn(i) for i in [0, n). Exceptions from workers are rethrown on the
// calling thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace isogeo4
