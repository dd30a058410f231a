#pragma once

#include <cstdint>
#include <functional>

namespace hamlab {

// Worker count: HAMLAB_THREADS if set (>= 1), otherwise hardware concurrency.
int thread_count();

// Splits [0, n) into contiguous chunks, one per worker. Each index is handled by
// exactly one call, so results written per index are deterministic.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body,
                  std::int64_t min_chunk = 1 << 14);

}  // namespace hamlab
