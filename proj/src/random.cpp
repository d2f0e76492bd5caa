#include "mtopdiv/random.hpp"

#include <cmath>
#include <numbers>

namespace mtd {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::next_u64() {
    ++counter_;
    return mix64(seed_ + counter_ * kGolden);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
    const auto range = static_cast<std::uint64_t>(n);
    // Reject the low sliver so that r % range is exactly uniform.
    const std::uint64_t floor = (0 - range) % range;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= floor) return static_cast<std::size_t>(r % range);
    }
}

double Rng::normal() {
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::substream(std::uint64_t id) const {
    return Rng(mix64(seed_ ^ mix64(id + kGolden)));
}

}  // namespace mtd
