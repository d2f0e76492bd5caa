#include "mtopdiv/synth.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mtopdiv/errors.hpp"
#include "mtopdiv/random.hpp"

namespace mtd {

namespace {

void require_planar(const GeneratorSpec& spec) {
    if (spec.center.size() != 2) throw InvalidInput("ring and disk generators are two-dimensional");
    if (!(spec.radius > 0.0) || !std::isfinite(spec.radius)) throw InvalidInput("radius must be positive");
}

}  // namespace

void GeneratorSpec::validate() const {
    if (n < 1) throw InvalidInput("generator needs n >= 1");
    for (double c : center) {
        if (!std::isfinite(c)) throw InvalidInput("center must be finite");
    }
    switch (kind) {
        case GeneratorKind::ring:
        case GeneratorKind::disk:
            require_planar(*this);
            break;
        case GeneratorKind::gaussian_mixture: {
            if (centers.empty()) throw InvalidInput("gaussian mixture needs at least one center");
            const std::size_t dim = centers.front().size();
            if (dim == 0) throw InvalidInput("gaussian mixture centers must be non-empty vectors");
            for (const auto& c : centers) {
                if (c.size() != dim) throw InvalidInput("gaussian mixture centers differ in dimension");
                for (double x : c) {
                    if (!std::isfinite(x)) throw InvalidInput("gaussian mixture center must be finite");
                }
            }
            if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidInput("sigma must be positive");
            if (!weights.empty()) {
                if (weights.size() != centers.size()) {
                    throw InvalidInput("expected " + std::to_string(centers.size()) + " weights, got " +
                                       std::to_string(weights.size()));
                }
                double total = 0.0;
                for (double w : weights) {
                    if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidInput("weights must be nonnegative");
                    total += w;
                }
                if (std::abs(total - 1.0) > 1e-9) throw InvalidInput("weights must sum to 1");
            }
            break;
        }
    }
}

PointCloud ring_cloud(const GeneratorSpec& spec) {
    spec.validate();
    if (spec.kind != GeneratorKind::ring) throw InvalidInput("ring_cloud: spec is not a ring");
    Rng rng(spec.seed);
    std::vector<double> coords;
    coords.reserve(2 * spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        coords.push_back(spec.center[0] + spec.radius * std::cos(theta));
        coords.push_back(spec.center[1] + spec.radius * std::sin(theta));
    }
    return PointCloud(spec.n, 2, std::move(coords));
}

PointCloud disk_cloud(const GeneratorSpec& spec) {
    spec.validate();
    if (spec.kind != GeneratorKind::disk) throw InvalidInput("disk_cloud: spec is not a disk");
    Rng rng(spec.seed);
    std::vector<double> coords;
    coords.reserve(2 * spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double r = spec.radius * std::sqrt(rng.uniform());
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        coords.push_back(spec.center[0] + r * std::cos(theta));
        coords.push_back(spec.center[1] + r * std::sin(theta));
    }
    return PointCloud(spec.n, 2, std::move(coords));
}

PointCloud gaussian_mixture(const GeneratorSpec& spec) {
    spec.validate();
    if (spec.kind != GeneratorKind::gaussian_mixture) throw InvalidInput("gaussian_mixture: wrong spec kind");
    const std::size_t k = spec.centers.size();
    const std::size_t dim = spec.centers.front().size();
    std::vector<double> cumulative(k);
    double acc = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        acc += spec.weights.empty() ? 1.0 / static_cast<double>(k) : spec.weights[c];
        cumulative[c] = acc;
    }

    Rng rng(spec.seed);
    std::vector<double> coords;
    coords.reserve(spec.n * dim);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double u = rng.uniform() * acc;
        std::size_t comp = 0;
        // Skip zero-weight components even when u lands on their boundary.
        while (comp + 1 < k && (u >= cumulative[comp] || (!spec.weights.empty() && spec.weights[comp] == 0.0))) {
            ++comp;
        }
        for (std::size_t d = 0; d < dim; ++d) coords.push_back(spec.centers[comp][d] + spec.sigma * rng.normal());
    }
    return PointCloud(spec.n, dim, std::move(coords));
}

PointCloud generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::ring: return ring_cloud(spec);
        case GeneratorKind::disk: return disk_cloud(spec);
        case GeneratorKind::gaussian_mixture: return gaussian_mixture(spec);
    }
    throw InvalidInput("unknown generator kind");
}

GeneratorSpec five_mode_layout(std::size_t n, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::gaussian_mixture;
    spec.n = n;
    spec.sigma = 0.05;
    spec.seed = seed;
    for (int c = 0; c < 5; ++c) {
        const double theta = 2.0 * std::numbers::pi * c / 5.0;
        spec.centers.push_back({2.0 * std::cos(theta), 2.0 * std::sin(theta)});
    }
    spec.weights.assign(5, 0.2);
    return spec;
}

PointCloud isometric_embedding(const PointCloud& cloud, std::size_t target_dim, std::uint64_t seed) {
    const std::size_t src = cloud.dim();
    if (target_dim < src) throw InvalidInput("isometric_embedding: target dimension below source dimension");
    Rng rng(seed);
    // basis[c] is column c of the target_dim x src embedding matrix.
    std::vector<std::vector<double>> basis(src, std::vector<double>(target_dim));
    for (std::size_t c = 0; c < src; ++c) {
        for (;;) {
            for (double& x : basis[c]) x = rng.normal();
            for (std::size_t prev = 0; prev < c; ++prev) {
                double dot = 0.0;
                for (std::size_t r = 0; r < target_dim; ++r) dot += basis[c][r] * basis[prev][r];
                for (std::size_t r = 0; r < target_dim; ++r) basis[c][r] -= dot * basis[prev][r];
            }
            double norm = 0.0;
            for (double x : basis[c]) norm += x * x;
            norm = std::sqrt(norm);
            if (norm > 1e-6) {
                for (double& x : basis[c]) x /= norm;
                break;
            }
        }
    }
    std::vector<double> coords(cloud.size() * target_dim, 0.0);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto row = cloud.row(i);
        for (std::size_t c = 0; c < src; ++c) {
            for (std::size_t r = 0; r < target_dim; ++r) coords[i * target_dim + r] += row[c] * basis[c][r];
        }
    }
    return PointCloud(cloud.size(), target_dim, std::move(coords));
}

}  // namespace mtd
