#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtopdiv/crossbarcode.hpp"
#include "mtopdiv/geometry.hpp"

namespace mtd {

enum class Direction { pq, qp, both };

Direction parse_direction(const std::string& text);

struct MTopDivConfig {
    std::size_t b_p = 1000;
    std::size_t b_q = 10000;
    std::size_t n_runs = 100;
    std::size_t hom_dim = 1;
    StatSpec stat{StatKind::sum};
    std::uint64_t seed = 0;
    Direction direction = Direction::pq;

    /// b_P = 100, b_Q = 1000, 10 runs.
    static MTopDivConfig desk();
};

struct MTopDivResult {
    std::string direction;  // "PQ" or "QP"
    std::vector<double> per_run;
    double mean = 0.0;
    double std_error = 0.0;  // sample std / sqrt(runs); 0 for a single run
};

/// Mean and standard error of per-run values.
MTopDivResult summarize(std::string direction, std::vector<double> per_run);

/// Cross-barcodes of n_runs subsampled pairs. Run j draws P_j then Q_j from
/// the substream Rng(seed).substream(j), so results do not depend on the
/// order in which runs execute. Runs are distributed over OpenMP threads.
std::vector<Barcode> subsampled_cross_barcodes(const PointCloud& x_p, const PointCloud& x_q, std::size_t b_p,
                                               std::size_t b_q, std::size_t n_runs, std::size_t hom_dim,
                                               std::uint64_t seed);

/// One result for pq or qp, two (PQ first) for both. The QP direction swaps
/// the clouds; b_P always sizes the first cloud of a direction.
std::vector<MTopDivResult> mtop_div(const PointCloud& x_p, const PointCloud& x_q, const MTopDivConfig& cfg);

/// Fraction of [0, alpha_max] covered by exactly k intervals.
struct RLTHistogram {
    double alpha_max = 1.0;
    std::map<std::size_t, double> mass;

    double at(std::size_t k) const {
        const auto it = mass.find(k);
        return it == mass.end() ? 0.0 : it->second;
    }
};

RLTHistogram rlt(const std::vector<Interval>& intervals, double alpha_max);

/// alpha_max defaults to the largest death, or 1 when there are no intervals
/// with positive death.
RLTHistogram rlt(const std::vector<Interval>& intervals);

/// Earth mover's distance to the histogram concentrated at 0: sum_k k mass(k).
double emd_to_empty(const RLTHistogram& histogram);

}  // namespace mtd
