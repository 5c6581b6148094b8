#pragma once

#include <cstddef>
#include <functional>

namespace spinelab {

/// Resolves a requested worker count: nonzero wins, then SPINELAB_THREADS
/// (0 = auto), then the hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);

/// Calls body(i) for i in [0, n) on up to `threads` workers. Iterations are
/// handed out in contiguous blocks; ordering of side effects is unspecified.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace spinelab
