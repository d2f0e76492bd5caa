#include "mtopdiv/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "mtopdiv/errors.hpp"

namespace mtd {

void set_thread_count(std::size_t threads) {
    if (threads > 0) omp_set_num_threads(static_cast<int>(threads));
}

std::size_t thread_count() { return static_cast<std::size_t>(omp_get_max_threads()); }

std::size_t configure_threads_from_env() {
    if (const char* raw = std::getenv("MTOPDIV_THREADS"); raw != nullptr && *raw != '\0') {
        char* end = nullptr;
        const long value = std::strtol(raw, &end, 10);
        if (*end != '\0' || value < 0) throw InvalidInput("MTOPDIV_THREADS must be a nonnegative integer");
        set_thread_count(static_cast<std::size_t>(value));
    }
    return thread_count();
}

}  // namespace mtd
