#pragma once

#include <cstddef>
#include <functional>

namespace starks {

/// Number of worker threads used by the parallel engines. Defaults to the
/// hardware concurrency; results never depend on this value.
unsigned thread_count();
void set_thread_count(unsigned n);

/// Runs body(i) for every i in [0, n). Work is handed out in chunks of
/// `grain` indices. Exceptions thrown by the body are rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t grain = 1);

}  // namespace starks
