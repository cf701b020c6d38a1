#pragma once

#include <cstddef>
#include <functional>

namespace kagome {

// Worker cap: min(hardware threads, CRYSTAL_KAGOME_THREADS if set and > 0).
int worker_count();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks over the
// worker threads; with one worker it degenerates to a plain loop. Callers are
// responsible for writing to disjoint output slots (results stay deterministic
// because item i always computes the same value regardless of scheduling).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace kagome
