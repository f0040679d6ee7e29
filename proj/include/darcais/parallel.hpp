// Bounded worker pool for index-parallel loops.

#ifndef DARCAIS_PARALLEL_HPP
#define DARCAIS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace darcais {

/// Worker count: DARCAIS_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls body(i) for every i in [0, count) on up to worker_count() threads.
/// Iterations must be independent; callers that need ordered output store
/// per-index results and assemble them afterwards. The first exception
/// thrown by any iteration is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace darcais

#endif
