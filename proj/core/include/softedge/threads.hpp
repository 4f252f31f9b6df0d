#pragma once

#include <functional>

namespace softedge {

// Thread count resolution: explicit request > SOFTEDGE_THREADS env var >
// hardware concurrency. Always at least 1.
int resolve_threads(int requested);

// Run fn(i) for i in [0, n) across `threads` workers on contiguous index
// blocks. Deterministic partition: results must not depend on the thread
// count as long as fn(i) is a pure function of i. Exceptions from workers
// are rethrown on the calling thread.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace softedge
