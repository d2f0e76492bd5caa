#pragma once

#include <cstddef>

#include "mtopdiv/geometry.hpp"

namespace mtd {

/// Weights on P ∪ Q with every Q-Q entry set to zero. Vertices [0, n_p) are
/// the P-points, [n_p, n_p + n_q) the Q-points. Generally not a metric.
struct QuotientMetric {
    DistanceMatrix matrix;
    std::size_t n_p = 0;
    std::size_t n_q = 0;

    bool is_q_vertex(std::size_t v) const { return v >= n_p; }
};

/// Block assembly [[m_pp, m_pq], [m_pq^T, 0]]. With n_q = 0 the result is m_pp.
QuotientMetric build_quotient(const DistanceMatrix& m_pp, const RectMatrix& m_pq);

/// Convenience: distances of both clouds followed by build_quotient.
QuotientMetric quotient_of(const PointCloud& p, const PointCloud& q);

}  // namespace mtd
