#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace mtd {

/// Counter-based generator (SplitMix64 finalizer over a Weyl sequence).
///
/// The seed and the order of draws fully determine every output, independent
/// of platform and standard library. Each derived quantity documents how many
/// 64-bit words it consumes so that the draw order is stable:
///   uniform()        1 word
///   uniform_index()  1 word, more on rejection
///   normal()         2 words (Box-Muller, cosine branch only)
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return next_u64(); }

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform integer in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n);

    double normal();

    /// Independent stream keyed by `id`; does not advance this generator.
    Rng substream(std::uint64_t id) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace mtd
