#pragma once

#include <cstddef>
#include <functional>

namespace starslice {

/// Worker count from STARSLICE_WORKERS (default: hardware concurrency).
/// Never influences numerical output: all reductions are index-ordered.
int worker_count();

/// Runs body(i) for i in [0, count). Nested calls run serially.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace starslice
