#pragma once

#include <cstddef>

namespace mtd {

/// Reads MTOPDIV_THREADS (0 or unset = runtime default) and applies it to
/// OpenMP. Returns the thread count in effect.
std::size_t configure_threads_from_env();

void set_thread_count(std::size_t threads);
std::size_t thread_count();

}  // namespace mtd
