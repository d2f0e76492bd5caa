#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mtopdiv/random.hpp"

namespace mtd {

/// n points in R^D stored row-major. Every coordinate is finite.
class PointCloud {
public:
    /// Empty cloud of ambient dimension `dim`.
    explicit PointCloud(std::size_t dim = 1);
    PointCloud(std::size_t n, std::size_t dim, std::vector<double> coords);
    PointCloud(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return dim_; }
    bool empty() const { return n_ == 0; }

    std::span<const double> row(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const double> coords() const { return coords_; }

    bool operator==(const PointCloud&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t dim_ = 1;
    std::vector<double> coords_;
};

/// Dense symmetric n x n matrix of nonnegative weights with zero diagonal.
/// The triangle inequality is not assumed.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    /// All-zero matrix.
    explicit DistanceMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}
    /// Validates shape, symmetry, zero diagonal, finiteness and sign.
    DistanceMatrix(std::size_t n, std::vector<double> values);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

    /// Writes both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double v) {
        values_[i * n_ + j] = v;
        values_[j * n_ + i] = v;
    }

    std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }
    std::span<const double> values() const { return values_; }

    double max_entry() const;

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> values_;
};

/// Rectangular rows x cols matrix, e.g. distances from P-points to Q-points.
class RectMatrix {
public:
    RectMatrix() = default;
    RectMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}
    RectMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
    std::span<const double> values() const { return values_; }

    bool operator==(const RectMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// Euclidean distance between two equally sized coordinate rows:
/// sqrt of the left-to-right sum of squared differences.
double euclidean(std::span<const double> a, std::span<const double> b);

/// All pairwise Euclidean distances, parallel over rows. Output is bitwise
/// identical to the serial reference for any thread count.
DistanceMatrix pairwise_distances(const PointCloud& cloud);

/// Entry (i, j) is the distance from p_i to q_j.
RectMatrix cross_distances(const PointCloud& p, const PointCloud& q);

/// sup over x in P of the distance from x to Q.
double directed_hausdorff(const PointCloud& p, const PointCloud& q);

double hausdorff_distance(const PointCloud& p, const PointCloud& q);

/// Negates coordinate `axis` of every point.
PointCloud reflect(const PointCloud& cloud, std::size_t axis);

PointCloud translate(const PointCloud& cloud, std::span<const double> offset);

/// b distinct rows chosen uniformly without replacement (partial Fisher-Yates,
/// consuming exactly b draws from `rng` when no rejection occurs). Rows are
/// returned in draw order.
PointCloud subsample(const PointCloud& cloud, std::size_t b, Rng& rng);

PointCloud concat(const PointCloud& a, const PointCloud& b);

namespace reference {

// Single-threaded scalar loops kept as the oracle for the parallel kernels.
DistanceMatrix pairwise_distances(const PointCloud& cloud);
RectMatrix cross_distances(const PointCloud& p, const PointCloud& q);

}  // namespace reference

}  // namespace mtd
