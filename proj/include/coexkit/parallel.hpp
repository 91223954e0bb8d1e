#pragma once

#include <cstddef>
#include <functional>

namespace coexkit {

/// Effective worker count: hardware concurrency capped by COEXKIT_THREADS.
int parallelism();

/// Runs body(i) for i in [0, count). Work is split into contiguous chunks;
/// each index is evaluated exactly once, so results must not depend on
/// evaluation order. Runs inline when parallelism() is 1 or count is small.
void parallel_for(size_t count, const std::function<void(size_t)>& body);

}  // namespace coexkit
