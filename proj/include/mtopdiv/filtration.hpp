#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mtopdiv/geometry.hpp"

namespace mtd {

using Vertex = std::uint32_t;

struct Simplex {
    std::vector<Vertex> vertices;  // strictly increasing
    double value = 0.0;            // largest pairwise weight, 0 for a vertex

    std::size_t dim() const { return vertices.size() - 1; }
    bool operator==(const Simplex&) const = default;
};

/// Total filtration order: value, then dimension, then lexicographic vertices.
/// Faces always precede their cofaces.
bool filtration_less(const Simplex& a, const Simplex& b);

struct Filtration {
    std::vector<Simplex> simplices;
    std::size_t num_vertices = 0;
    std::size_t max_dim = 0;
    std::optional<double> threshold;
};

/// Appearance value of a vertex set: max pairwise weight.
double simplex_value(std::span<const Vertex> vertices, const DistanceMatrix& weights);

/// Every simplex of dimension <= max_dim whose value is <= threshold (all of
/// them when no threshold is given), sorted by filtration_less.
Filtration vr_filtration(const DistanceMatrix& weights, std::size_t max_dim,
                         std::optional<double> threshold = std::nullopt);

}  // namespace mtd
