#pragma once

#include <cstddef>
#include <functional>

namespace aluthge {

/// Worker count: ALUTHGE_LAB_THREADS when set (>= 1), else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace aluthge
