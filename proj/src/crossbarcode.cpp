#include "mtopdiv/crossbarcode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "mtopdiv/errors.hpp"
#include "mtopdiv/filtration.hpp"

namespace mtd {

namespace {

Barcode full_barcode(const DistanceMatrix& m, std::size_t max_hom_dim, const CrossBarcodeOptions& options) {
    if (options.engine == Engine::implicit_cohomology) return rips_barcode(m, max_hom_dim, options.threshold);
    const std::size_t max_dim = std::min(max_hom_dim + 1, m.size() - 1);
    const auto mode = options.engine == Engine::explicit_plain ? ReductionMode::plain : ReductionMode::clearing;
    return reduce(vr_filtration(m, max_dim, options.threshold), max_hom_dim, mode);
}

}  // namespace

Barcode cross_barcode(const QuotientMetric& qm, std::size_t max_hom_dim, const CrossBarcodeOptions& options) {
    if (qm.n_p == 0) throw InvalidInput("cross_barcode: the first cloud must be non-empty");
    Barcode barcode = full_barcode(qm.matrix, max_hom_dim, options);
    if (qm.n_q == 0) return barcode;

    // Exactly one class survives: the component that contains Q.
    Barcode result(max_hom_dim);
    bool removed = false;
    for (std::size_t dim = 0; dim <= max_hom_dim; ++dim) {
        for (const Interval& interval : barcode[dim]) {
            const bool open = interval.is_essential() || interval.truncated;
            if (dim == 0 && open && !removed) {
                removed = true;
                continue;
            }
            if (interval.is_essential()) {
                throw InternalError("cross_barcode: unexpected essential class in dimension " + std::to_string(dim));
            }
            result.add(interval);
        }
    }
    if (!removed) throw InternalError("cross_barcode: missing essential class of the Q component");
    result.normalize();
    return result;
}

Barcode cross_barcode(const PointCloud& p, const PointCloud& q, std::size_t max_hom_dim,
                      const CrossBarcodeOptions& options) {
    if (p.empty()) throw InvalidInput("cross_barcode: the first cloud must be non-empty");
    if (!q.empty() && p.dim() != q.dim()) throw InvalidInput("cross_barcode: clouds differ in dimension");
    if (q.empty()) return cross_barcode(QuotientMetric{pairwise_distances(p), p.size(), 0}, max_hom_dim, options);
    return cross_barcode(quotient_of(p, q), max_hom_dim, options);
}

std::vector<Interval> h0_oracle(const QuotientMetric& qm) {
    if (qm.n_q == 0) throw InvalidInput("h0_oracle: Q must be non-empty");
    const std::size_t n_p = qm.n_p;
    const std::size_t cluster = n_p;  // stands for all of Q
    struct Edge {
        double w;
        std::size_t a, b;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n_p; ++i) {
        for (std::size_t j = i + 1; j < n_p; ++j) edges.push_back({qm.matrix(i, j), i, j});
        for (std::size_t j = n_p; j < n_p + qm.n_q; ++j) edges.push_back({qm.matrix(i, j), i, cluster});
    }
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.w < y.w; });

    std::vector<std::size_t> label(n_p + 1);
    std::iota(label.begin(), label.end(), std::size_t{0});
    std::vector<Interval> out;
    for (const Edge& e : edges) {
        const std::size_t la = label[e.a];
        const std::size_t lb = label[e.b];
        if (la == lb) continue;
        for (auto& l : label) {
            if (l == la) l = lb;
        }
        if (e.w > 0.0) out.push_back({0.0, e.w, 0, false});
    }
    std::sort(out.begin(), out.end(), interval_less);
    return out;
}

double bottleneck_norm(const std::vector<Interval>& intervals) {
    double norm = 0.0;
    for (const Interval& i : intervals) {
        if (i.is_essential()) throw InvalidInput("bottleneck_norm: infinite interval");
        norm = std::max(norm, i.length());
    }
    return norm;
}

StatSpec StatSpec::parse(const std::string& text) {
    if (text == "sum") return {StatKind::sum};
    if (text == "sum_sq") return {StatKind::sum_sq};
    if (text == "count") return {StatKind::count};
    if (text == "max") return {StatKind::max};
    const std::string prefix = "quantile:";
    if (text.rfind(prefix, 0) == 0) {
        std::size_t used = 0;
        double q = 0.0;
        try {
            q = std::stod(text.substr(prefix.size()), &used);
        } catch (const std::exception&) {
            throw InvalidInput("statistic: cannot parse quantile in '" + text + "'");
        }
        if (used != text.size() - prefix.size()) throw InvalidInput("statistic: trailing characters in '" + text + "'");
        if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("statistic: quantile must lie in [0, 1]");
        return {StatKind::quantile, q};
    }
    throw InvalidInput("unknown statistic '" + text + "'");
}

std::string StatSpec::name() const {
    switch (kind) {
        case StatKind::sum: return "sum";
        case StatKind::sum_sq: return "sum_sq";
        case StatKind::count: return "count";
        case StatKind::max: return "max";
        case StatKind::quantile: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "quantile:%.17g", q);
            return buf;
        }
    }
    return "unknown";
}

BarcodeStat barcode_stat(const std::vector<Interval>& intervals, StatSpec spec) {
    if (spec.kind == StatKind::count) return {spec, static_cast<double>(intervals.size())};
    if (spec.kind == StatKind::quantile && !(spec.q >= 0.0 && spec.q <= 1.0)) {
        throw InvalidInput("barcode_stat: quantile must lie in [0, 1]");
    }
    std::vector<double> lengths;
    lengths.reserve(intervals.size());
    for (const Interval& i : intervals) {
        if (i.is_essential()) throw InvalidInput("barcode_stat: " + spec.name() + " over an infinite interval");
        lengths.push_back(i.length());
    }
    double value = 0.0;
    switch (spec.kind) {
        case StatKind::sum:
            for (double l : lengths) value += l;
            break;
        case StatKind::sum_sq:
            for (double l : lengths) value += l * l;
            break;
        case StatKind::max:
            for (double l : lengths) value = std::max(value, l);
            break;
        case StatKind::quantile: {
            if (lengths.empty()) break;
            std::sort(lengths.begin(), lengths.end());
            const double pos = spec.q * static_cast<double>(lengths.size() - 1);
            const auto lo = static_cast<std::size_t>(std::floor(pos));
            const std::size_t hi = std::min(lo + 1, lengths.size() - 1);
            value = lengths[lo] + (pos - static_cast<double>(lo)) * (lengths[hi] - lengths[lo]);
            break;
        }
        case StatKind::count:
            break;
    }
    return {spec, value};
}

}  // namespace mtd
