#pragma once

#include <cstddef>
#include <functional>

namespace pacbound {

/// Runs fn(0..n-1) on up to `jobs` threads. Each index must be an
/// independent pure task; results written to per-index slots are therefore
/// identical to a sequential run. The first exception thrown by any task is
/// rethrown on the calling thread after all workers join.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn);

/// --jobs resolution: explicit value > PACBOUND_JOBS env var > hardware.
std::size_t resolve_jobs(std::size_t requested);

} // namespace pacbound
