#pragma once

#include <functional>

namespace ifl {

/// Runs task(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency). Each index is run exactly once; the first exception is rethrown.
void parallel_for(int count, int threads, const std::function<void(int)>& task);

int resolve_threads(int requested);

}  // namespace ifl
