#pragma once

#include <cstddef>
#include <functional>

namespace octoramsey {

/// Worker count for sweeps: hardware concurrency, capped by the
/// OCTORAMSEY_THREADS environment variable when set. Always >= 1.
std::size_t worker_count();

/// Runs fn(i) for every i in [0, n), split into contiguous chunks across
/// workers. fn must be pure or write only to slot i of shared output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace octoramsey
