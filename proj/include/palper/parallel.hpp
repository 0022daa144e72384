#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace palper {

// Worker count for shardable scans: PALPER_THREADS when set (clamped to
// [1, 256]), otherwise hardware concurrency.
unsigned worker_count();

// Splits [0, n) into one contiguous block per worker and runs
// body(begin, end, worker_index), possibly concurrently. Callers keep
// per-worker state and merge it in worker order, which keeps results
// deterministic regardless of scheduling.
void parallel_blocks(
    std::uint64_t n,
    const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body);

}  // namespace palper
