#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "mtopdiv/filtration.hpp"
#include "mtopdiv/geometry.hpp"

namespace mtd {

/// Death of a class that never dies. Never replaced by a large finite value.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Interval {
    double birth = 0.0;
    double death = kInfinity;
    std::size_t dim = 0;
    /// Still alive at the filtration cap; death was set to the cap.
    bool truncated = false;

    bool is_essential() const { return std::isinf(death); }
    double length() const { return death - birth; }
    bool alive_at(double alpha) const { return birth <= alpha && alpha < death; }

    bool operator==(const Interval&) const = default;
};

/// Orders by (birth, death).
bool interval_less(const Interval& a, const Interval& b);

/// Persistence intervals for homology dimensions 0..max_hom_dim.
class Barcode {
public:
    explicit Barcode(std::size_t max_hom_dim = 0) : dims_(max_hom_dim + 1) {}

    std::size_t max_hom_dim() const { return dims_.size() - 1; }

    const std::vector<Interval>& operator[](std::size_t dim) const { return dims_.at(dim); }
    std::vector<Interval>& operator[](std::size_t dim) { return dims_.at(dim); }

    /// Appends unless birth == death.
    void add(const Interval& interval);

    /// Sorts every dimension by (birth, death).
    void normalize();

    std::size_t total_size() const;
    bool empty() const { return total_size() == 0; }

    bool operator==(const Barcode&) const = default;

private:
    std::vector<std::vector<Interval>> dims_;
};

/// Number of intervals with birth <= alpha < death.
std::size_t alive_count(const std::vector<Interval>& intervals, double alpha);

enum class ReductionMode {
    plain,     // left-to-right column reduction, every column
    clearing,  // same pairing; zeroes columns already known to be births
};

/// A persistence pair in filtration positions. `death` is empty for an
/// essential class.
struct PersistencePair {
    std::size_t birth;
    std::optional<std::size_t> death;
};

/// Pairs of the boundary matrix of `f` restricted to simplices of dimension
/// <= max_hom_dim + 1, reduced over Z/2.
std::vector<PersistencePair> persistence_pairs(const Filtration& f, std::size_t max_hom_dim,
                                               ReductionMode mode = ReductionMode::plain);

/// Barcode of an explicit filtration. Requires f.max_dim >= max_hom_dim + 1
/// unless the filtration already holds every simplex (max_dim = n - 1).
/// When the filtration carries a threshold, essential classes are reported
/// with death = threshold and flagged truncated.
Barcode reduce(const Filtration& f, std::size_t max_hom_dim, ReductionMode mode = ReductionMode::plain);

/// Zero-dimensional barcode by union-find over edges sorted by weight.
Barcode h0_union_find(const DistanceMatrix& weights, std::optional<double> threshold = std::nullopt);

/// Vietoris-Rips barcode without materializing the filtration: union-find in
/// dimension 0, then cohomology with implicit coboundaries, clearing and
/// emergent pairs in dimensions 1..max_hom_dim. Produces the same barcode as
/// reduce(vr_filtration(weights, max_hom_dim + 1, threshold), max_hom_dim).
Barcode rips_barcode(const DistanceMatrix& weights, std::size_t max_hom_dim,
                     std::optional<double> threshold = std::nullopt);

/// Test oracle: k-th Betti number over Z/2 of the Rips complex at alpha, by
/// exhaustive enumeration and Gaussian elimination of the boundary maps.
/// Refuses inputs with more than `max_vertices` points.
std::size_t betti_oracle(const DistanceMatrix& weights, double alpha, std::size_t k,
                         std::size_t max_vertices = 14);

}  // namespace mtd
