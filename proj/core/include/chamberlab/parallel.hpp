#pragma once

#include <cstddef>
#include <functional>

namespace chamberlab {

/// Caps the number of worker threads used by library loops (0 = hardware
/// concurrency). Results never depend on the setting.
void set_thread_limit(unsigned n);
unsigned thread_limit();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// fn(begin, end, worker) on each. Runs inline when one worker suffices.
/// Returns the number of workers used.
unsigned parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, unsigned)>& fn,
                         std::size_t min_chunk = 256);

} // namespace chamberlab
