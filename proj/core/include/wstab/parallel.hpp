#pragma once

#include <cstddef>
#include <functional>

namespace wstab {

/// Worker count: WSTAB_THREADS if set and positive, else hardware
/// concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index runs exactly once; callers
/// write results into per-index slots so the output does not depend on
/// scheduling. The first exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wstab
