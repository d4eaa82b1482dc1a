#pragma once

#include <cstddef>
#include <functional>

namespace xychain {

/// Worker count resolution: explicit argument if > 0, else the
/// XYCHAIN_THREADS environment variable, else hardware concurrency.
int default_thread_count();

/// Runs body(i) for i in [0, n) on a static index partition. Workers write
/// to disjoint indices, so output ordering is fixed by the index map and
/// never by completion order.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace xychain
