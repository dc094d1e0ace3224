#pragma once

#include <cstddef>
#include <functional>

namespace quant {

/// Worker cap: QUANT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_budget();

/// Calls body(i) for i in [0, count) on up to thread_budget() threads.
/// Rethrows the first exception (by index) after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace quant
