#include "mtopdiv/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mtopdiv/errors.hpp"

namespace mtd {

bool filtration_less(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

double simplex_value(std::span<const Vertex> vertices, const DistanceMatrix& weights) {
    if (vertices.empty()) throw InvalidInput("simplex_value: empty vertex list");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= weights.size()) {
            throw InvalidInput("simplex_value: vertex " + std::to_string(vertices[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (vertices[i] == vertices[j]) throw InvalidInput("simplex_value: duplicate vertex");
        }
    }
    double value = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) value = std::max(value, weights(vertices[i], vertices[j]));
    }
    return value;
}

namespace {

// Extends `current` by vertices larger than its last one, pruning any
// extension whose value exceeds the cap.
void extend_cliques(const DistanceMatrix& w, std::size_t max_dim, double cap, Simplex& current,
                    std::vector<Simplex>& out) {
    out.push_back(current);
    if (current.dim() == max_dim) return;
    const auto n = static_cast<Vertex>(w.size());
    for (Vertex v = current.vertices.back() + 1; v < n; ++v) {
        double value = current.value;
        for (Vertex u : current.vertices) value = std::max(value, w(u, v));
        if (value > cap) continue;
        const double saved = current.value;
        current.vertices.push_back(v);
        current.value = value;
        extend_cliques(w, max_dim, cap, current, out);
        current.vertices.pop_back();
        current.value = saved;
    }
}

}  // namespace

Filtration vr_filtration(const DistanceMatrix& weights, std::size_t max_dim, std::optional<double> threshold) {
    const std::size_t n = weights.size();
    if (max_dim >= n) {
        throw InvalidInput("vr_filtration: max_dim " + std::to_string(max_dim) + " requires more than " +
                           std::to_string(n) + " vertices");
    }
    if (threshold && (std::isnan(*threshold) || *threshold < 0.0)) {
        throw InvalidInput("vr_filtration: threshold must be nonnegative");
    }
    const double cap = threshold.value_or(std::numeric_limits<double>::infinity());

    Filtration f;
    f.num_vertices = n;
    f.max_dim = max_dim;
    f.threshold = threshold;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        Simplex s{{v}, 0.0};
        extend_cliques(weights, max_dim, cap, s, f.simplices);
    }
    std::sort(f.simplices.begin(), f.simplices.end(), filtration_less);
    return f;
}

}  // namespace mtd
