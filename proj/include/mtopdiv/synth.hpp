#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mtopdiv/geometry.hpp"

namespace mtd {

enum class GeneratorKind { ring, disk, gaussian_mixture };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::ring;
    std::size_t n = 0;
    std::vector<double> center{0.0, 0.0};      // ring, disk (2D)
    double radius = 1.0;                       // ring, disk
    std::vector<std::vector<double>> centers;  // gaussian_mixture
    double sigma = 1.0;                        // gaussian_mixture
    std::vector<double> weights;               // gaussian_mixture; empty means uniform
    std::uint64_t seed = 0;

    /// Throws InvalidInput when the spec violates its kind's constraints.
    void validate() const;
};

/// Uniform angles on a circle in the plane. One draw per point.
PointCloud ring_cloud(const GeneratorSpec& spec);

/// Uniform on a disk by the square-root radius method. Two draws per point
/// (radius, then angle).
PointCloud disk_cloud(const GeneratorSpec& spec);

/// Component chosen by cumulative weights (one draw), then an isotropic normal
/// of scale sigma around its center (two draws per coordinate). Zero weights
/// express dropped modes.
PointCloud gaussian_mixture(const GeneratorSpec& spec);

PointCloud generate(const GeneratorSpec& spec);

/// Five components equally spaced on a circle of radius 2 with sigma 0.05.
/// Layout constants for the mode-dropping experiment.
GeneratorSpec five_mode_layout(std::size_t n, std::uint64_t seed);

/// Maps a cloud isometrically into R^target_dim through a random matrix with
/// orthonormal columns (Gram-Schmidt on Gaussian draws).
PointCloud isometric_embedding(const PointCloud& cloud, std::size_t target_dim, std::uint64_t seed);

}  // namespace mtd
