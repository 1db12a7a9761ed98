#pragma once

#include <cstddef>
#include <functional>

namespace subplanck {

/// Number of worker threads to use: hardware concurrency, capped by the
/// SUBPLANCK_THREADS environment variable when set to a positive integer.
std::size_t worker_count();

/// Runs body(i) for every i in [0, n). Indices are split into contiguous
/// static blocks, so each index is processed exactly once by one worker and
/// results written per index are independent of the worker count.
/// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace subplanck
