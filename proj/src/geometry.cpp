#include "mtopdiv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mtopdiv/errors.hpp"

namespace mtd {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw InvalidInput(std::string(what) + ": non-finite value at flat offset " + std::to_string(i));
        }
    }
}

void require_same_dim(const PointCloud& p, const PointCloud& q) {
    if (p.dim() != q.dim()) {
        throw InvalidInput("dimension mismatch: " + std::to_string(p.dim()) + " vs " + std::to_string(q.dim()));
    }
}

}  // namespace

PointCloud::PointCloud(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw InvalidInput("point cloud dimension must be at least 1");
}

PointCloud::PointCloud(std::size_t n, std::size_t dim, std::vector<double> coords)
    : n_(n), dim_(dim), coords_(std::move(coords)) {
    if (dim == 0) throw InvalidInput("point cloud dimension must be at least 1");
    if (coords_.size() != n * dim) {
        throw InvalidInput("point cloud expects " + std::to_string(n * dim) + " coordinates, got " +
                           std::to_string(coords_.size()));
    }
    require_finite(coords_, "point cloud");
}

PointCloud::PointCloud(std::initializer_list<std::initializer_list<double>> rows) {
    n_ = rows.size();
    dim_ = n_ == 0 ? 1 : rows.begin()->size();
    if (dim_ == 0) throw InvalidInput("point cloud dimension must be at least 1");
    coords_.reserve(n_ * dim_);
    for (const auto& r : rows) {
        if (r.size() != dim_) throw InvalidInput("ragged point cloud rows");
        coords_.insert(coords_.end(), r.begin(), r.end());
    }
    require_finite(coords_, "point cloud");
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != n * n) throw InvalidInput("distance matrix must have n*n entries");
    for (std::size_t i = 0; i < n; ++i) {
        if (values_[i * n + i] != 0.0) throw InvalidInput("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            const double v = values_[i * n + j];
            if (!std::isfinite(v) || v < 0.0) throw InvalidInput("distance matrix entries must be finite and >= 0");
            if (v != values_[j * n + i]) throw InvalidInput("distance matrix must be symmetric");
        }
    }
}

double DistanceMatrix::max_entry() const {
    return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

RectMatrix::RectMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows * cols) throw InvalidInput("rectangular matrix must have rows*cols entries");
    for (double v : values_) {
        if (!std::isfinite(v) || v < 0.0) throw InvalidInput("cross distances must be finite and >= 0");
    }
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n == 0) throw InvalidInput("pairwise_distances: empty cloud");
    DistanceMatrix m(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto row = cloud.row(static_cast<std::size_t>(i));
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
            m.set(static_cast<std::size_t>(i), j, euclidean(row, cloud.row(j)));
        }
    }
    return m;
}

RectMatrix cross_distances(const PointCloud& p, const PointCloud& q) {
    require_same_dim(p, q);
    RectMatrix m(p.size(), q.size());
    const auto rows = static_cast<std::ptrdiff_t>(p.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const auto row = p.row(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < q.size(); ++j) {
            m(static_cast<std::size_t>(i), j) = euclidean(row, q.row(j));
        }
    }
    return m;
}

double directed_hausdorff(const PointCloud& p, const PointCloud& q) {
    require_same_dim(p, q);
    if (p.empty() || q.empty()) throw InvalidInput("hausdorff distance of an empty cloud");
    double result = 0.0;
    const auto rows = static_cast<std::ptrdiff_t>(p.size());
#pragma omp parallel for schedule(static) reduction(max : result)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const auto row = p.row(static_cast<std::size_t>(i));
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < q.size(); ++j) nearest = std::min(nearest, euclidean(row, q.row(j)));
        result = std::max(result, nearest);
    }
    return result;
}

double hausdorff_distance(const PointCloud& p, const PointCloud& q) {
    return std::max(directed_hausdorff(p, q), directed_hausdorff(q, p));
}

PointCloud reflect(const PointCloud& cloud, std::size_t axis) {
    if (axis >= cloud.dim()) {
        throw InvalidInput("reflect: axis " + std::to_string(axis) + " out of range for dimension " +
                           std::to_string(cloud.dim()));
    }
    std::vector<double> coords(cloud.coords().begin(), cloud.coords().end());
    for (std::size_t i = 0; i < cloud.size(); ++i) coords[i * cloud.dim() + axis] = -coords[i * cloud.dim() + axis];
    return PointCloud(cloud.size(), cloud.dim(), std::move(coords));
}

PointCloud translate(const PointCloud& cloud, std::span<const double> offset) {
    if (offset.size() != cloud.dim()) throw InvalidInput("translate: offset dimension mismatch");
    std::vector<double> coords(cloud.coords().begin(), cloud.coords().end());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (std::size_t k = 0; k < cloud.dim(); ++k) coords[i * cloud.dim() + k] += offset[k];
    }
    return PointCloud(cloud.size(), cloud.dim(), std::move(coords));
}

PointCloud subsample(const PointCloud& cloud, std::size_t b, Rng& rng) {
    const std::size_t n = cloud.size();
    if (b > n) {
        throw InvalidInput("subsample: requested " + std::to_string(b) + " rows from a cloud of " + std::to_string(n));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> coords;
    coords.reserve(b * cloud.dim());
    for (std::size_t k = 0; k < b; ++k) {
        const std::size_t pick = k + rng.uniform_index(n - k);
        std::swap(order[k], order[pick]);
        const auto row = cloud.row(order[k]);
        coords.insert(coords.end(), row.begin(), row.end());
    }
    return PointCloud(b, cloud.dim(), std::move(coords));
}

PointCloud concat(const PointCloud& a, const PointCloud& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    require_same_dim(a, b);
    std::vector<double> coords(a.coords().begin(), a.coords().end());
    coords.insert(coords.end(), b.coords().begin(), b.coords().end());
    return PointCloud(a.size() + b.size(), a.dim(), std::move(coords));
}

namespace reference {

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n == 0) throw InvalidInput("pairwise_distances: empty cloud");
    std::vector<double> values(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double sum = 0.0;
            for (std::size_t k = 0; k < cloud.dim(); ++k) {
                const double diff = cloud.row(i)[k] - cloud.row(j)[k];
                sum += diff * diff;
            }
            values[i * n + j] = std::sqrt(sum);
        }
    }
    return DistanceMatrix(n, std::move(values));
}

RectMatrix cross_distances(const PointCloud& p, const PointCloud& q) {
    require_same_dim(p, q);
    std::vector<double> values;
    values.reserve(p.size() * q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < p.dim(); ++k) {
                const double diff = p.row(i)[k] - q.row(j)[k];
                sum += diff * diff;
            }
            values.push_back(std::sqrt(sum));
        }
    }
    return RectMatrix(p.size(), q.size(), std::move(values));
}

}  // namespace reference

}  // namespace mtd
