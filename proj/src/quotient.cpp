#include "mtopdiv/quotient.hpp"

#include <cmath>
#include <string>

#include "mtopdiv/errors.hpp"

namespace mtd {

QuotientMetric build_quotient(const DistanceMatrix& m_pp, const RectMatrix& m_pq) {
    const std::size_t n_p = m_pp.size();
    if (m_pq.rows() != n_p) {
        throw InvalidInput("build_quotient: cross block has " + std::to_string(m_pq.rows()) + " rows, expected " +
                           std::to_string(n_p));
    }
    const std::size_t n_q = m_pq.cols();
    for (double v : m_pq.values()) {
        if (!std::isfinite(v) || v < 0.0) throw InvalidInput("build_quotient: cross distances must be finite and >= 0");
    }
    if (n_q == 0) return {m_pp, n_p, 0};

    DistanceMatrix m(n_p + n_q);
    for (std::size_t i = 0; i < n_p; ++i) {
        for (std::size_t j = i + 1; j < n_p; ++j) m.set(i, j, m_pp(i, j));
        for (std::size_t j = 0; j < n_q; ++j) m.set(i, n_p + j, m_pq(i, j));
    }
    return {std::move(m), n_p, n_q};
}

QuotientMetric quotient_of(const PointCloud& p, const PointCloud& q) {
    return build_quotient(pairwise_distances(p), cross_distances(p, q));
}

}  // namespace mtd
