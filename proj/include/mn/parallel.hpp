#pragma once

#include <cstddef>
#include <functional>

namespace mn {

/// Worker count used by data-parallel loops; 1 disables threading.
/// Results never depend on this value: parallel loops only evaluate pure
/// functions into preassigned slots.
unsigned &global_thread_count();

/// Runs fn(0..n-1), chunked across the configured number of workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

} // namespace mn
