#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mtd::experiments {

/// "a:b:step" with a <= b and step > 0; endpoints inclusive up to rounding.
std::vector<double> parse_range(const std::string& text);

/// Comma-separated positive integers.
std::vector<std::size_t> parse_sizes(const std::string& text);

/// Comma-separated decimals.
std::vector<double> parse_list(const std::string& text);

struct RingsConfig {
    std::size_t n = 1000;
    std::size_t b_p = 100;
    std::size_t b_q = 1000;
    std::size_t runs = 10;
    std::uint64_t seed = 0;
};

struct RingsRow {
    double d = 0.0;
    double mtopdiv_mean = 0.0;
    double mtopdiv_stderr = 0.0;
    double h0_max_mean = 0.0;
};

/// Unit circles centered at (0, 0) and (d, 0). The clouds depend on the seed
/// only, so rows of a sweep differ by the shift alone.
RingsRow rings_row(double d, const RingsConfig& cfg);

struct DisksRow {
    double d = 0.0;
    double h0_max_mean = 0.0;
    double h1_sum_mean = 0.0;
};

/// Full cross-barcodes of unit disks centered at (0, 0) and (d, 0), averaged
/// over `seeds` independent cloud pairs.
DisksRow disks_row(double d, std::size_t n, std::size_t seeds, std::uint64_t seed);

struct DecayRow {
    std::size_t n = 0;
    double h1_max_mean = 0.0;
};

/// Two independent n-point clouds from the same unit disk.
DecayRow decay_row(std::size_t n, std::size_t seeds, std::uint64_t seed);

}  // namespace mtd::experiments
