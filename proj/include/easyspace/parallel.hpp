#pragma once

#include <cstddef>
#include <functional>

namespace easyspace {

/// Worker count used by the bulk routines. Defaults to the hardware
/// concurrency; results never depend on it.
unsigned thread_count();
void set_thread_count(unsigned threads);

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Work is
/// handed out by an atomic counter; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace easyspace
