#pragma once

#include <cstdint>
#include <functional>

namespace suitalab {

// Worker count: hardware concurrency clamped by the SUITA_LAB_THREADS
// environment variable; always at least 1.
int worker_count();

// Runs f(i) for i in [0, n).  Work is split in contiguous blocks; callers
// must write results into per-index slots so the outcome is independent of
// the number of workers.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& f);

}  // namespace suitalab
