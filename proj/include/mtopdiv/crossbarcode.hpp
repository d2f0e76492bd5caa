#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtopdiv/geometry.hpp"
#include "mtopdiv/persistence.hpp"
#include "mtopdiv/quotient.hpp"

namespace mtd {

enum class Engine {
    implicit_cohomology,  // production path
    explicit_plain,       // vr_filtration + plain column reduction
    explicit_clearing,    // vr_filtration + reduction with clearing
};

struct CrossBarcodeOptions {
    Engine engine = Engine::implicit_cohomology;
    std::optional<double> threshold;
};

/// Barcode of the Rips filtration of the quotient metric. With Q non-empty the
/// single essential H0 class (the component holding Q) is removed; with Q
/// empty this is the ordinary barcode of P.
Barcode cross_barcode(const QuotientMetric& qm, std::size_t max_hom_dim, const CrossBarcodeOptions& options = {});

Barcode cross_barcode(const PointCloud& p, const PointCloud& q, std::size_t max_hom_dim,
                      const CrossBarcodeOptions& options = {});

/// Kruskal over the quotient graph starting from n_P singletons and one
/// merged Q-cluster; each merge at weight w yields [0, w]. Zero-length
/// intervals are dropped, the rest sorted.
std::vector<Interval> h0_oracle(const QuotientMetric& qm);

/// Longest interval length; 0 for an empty list.
double bottleneck_norm(const std::vector<Interval>& intervals);

enum class StatKind { sum, sum_sq, count, max, quantile };

struct StatSpec {
    StatKind kind = StatKind::sum;
    double q = 0.5;  // only read for quantile

    /// "sum", "sum_sq", "count", "max" or "quantile:<q>".
    static StatSpec parse(const std::string& text);
    std::string name() const;
};

struct BarcodeStat {
    StatSpec spec;
    double value = 0.0;
};

/// Statistic over interval lengths. Quantiles interpolate linearly between
/// order statistics at position (m - 1) q.
BarcodeStat barcode_stat(const std::vector<Interval>& intervals, StatSpec spec);

}  // namespace mtd
