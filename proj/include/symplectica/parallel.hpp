#pragma once

#include <cstddef>
#include <functional>

namespace symplectica {

/// Worker count: explicit override if set, else SYMPLECTICA_THREADS, else
/// hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t n);   // 0 restores the default

/// Split [0, n) into contiguous blocks and call fn(lo, hi) on each, one block
/// per worker. Callers write only into slots owned by their block, so the
/// result never depends on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace symplectica
