#pragma once

#include <cstddef>
#include <functional>

namespace lg {

/// Worker count for scans: LG_SCAN_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
unsigned scan_thread_count();

/// Calls body(i) for every i in [0, n) on up to `threads` workers. Each index
/// is visited exactly once; the first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = scan_thread_count());

}  // namespace lg
