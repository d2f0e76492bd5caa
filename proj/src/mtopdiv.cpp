#include "mtopdiv/mtopdiv.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>

#include "mtopdiv/errors.hpp"

namespace mtd {

Direction parse_direction(const std::string& text) {
    if (text == "pq" || text == "PQ") return Direction::pq;
    if (text == "qp" || text == "QP") return Direction::qp;
    if (text == "both") return Direction::both;
    throw InvalidInput("unknown direction '" + text + "' (expected pq, qp or both)");
}

MTopDivConfig MTopDivConfig::desk() {
    MTopDivConfig cfg;
    cfg.b_p = 100;
    cfg.b_q = 1000;
    cfg.n_runs = 10;
    return cfg;
}

MTopDivResult summarize(std::string direction, std::vector<double> per_run) {
    MTopDivResult r;
    r.direction = std::move(direction);
    r.per_run = std::move(per_run);
    const auto m = static_cast<double>(r.per_run.size());
    if (r.per_run.empty()) return r;
    double sum = 0.0;
    for (double v : r.per_run) sum += v;
    r.mean = sum / m;
    if (r.per_run.size() > 1) {
        double ss = 0.0;
        for (double v : r.per_run) ss += (v - r.mean) * (v - r.mean);
        r.std_error = std::sqrt(ss / (m - 1.0)) / std::sqrt(m);
    }
    return r;
}

std::vector<Barcode> subsampled_cross_barcodes(const PointCloud& x_p, const PointCloud& x_q, std::size_t b_p,
                                               std::size_t b_q, std::size_t n_runs, std::size_t hom_dim,
                                               std::uint64_t seed) {
    if (b_p < 1) throw InvalidInput("mtop_div: b_P must be at least 1");
    if (n_runs < 1) throw InvalidInput("mtop_div: at least one run is required");
    if (b_p > x_p.size()) throw InvalidInput("mtop_div: b_P exceeds the size of the first cloud");
    if (b_q > x_q.size()) throw InvalidInput("mtop_div: b_Q exceeds the size of the second cloud");
    if (!x_q.empty() && x_p.dim() != x_q.dim()) throw InvalidInput("mtop_div: clouds differ in dimension");

    std::vector<Barcode> barcodes(n_runs);
    std::exception_ptr failure;
    std::mutex failure_lock;
    const Rng root(seed);
    const auto runs = static_cast<std::ptrdiff_t>(n_runs);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t j = 0; j < runs; ++j) {
        try {
            Rng rng = root.substream(static_cast<std::uint64_t>(j));
            const PointCloud p = subsample(x_p, b_p, rng);
            const PointCloud q = subsample(x_q, b_q, rng);
            barcodes[static_cast<std::size_t>(j)] = cross_barcode(p, q, hom_dim);
        } catch (...) {
            const std::lock_guard lock(failure_lock);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return barcodes;
}

namespace {

MTopDivResult one_direction(const PointCloud& first, const PointCloud& second, const MTopDivConfig& cfg,
                            std::string label) {
    const auto barcodes =
        subsampled_cross_barcodes(first, second, cfg.b_p, cfg.b_q, cfg.n_runs, cfg.hom_dim, cfg.seed);
    std::vector<double> values;
    values.reserve(barcodes.size());
    for (const Barcode& b : barcodes) values.push_back(barcode_stat(b[cfg.hom_dim], cfg.stat).value);
    return summarize(std::move(label), std::move(values));
}

}  // namespace

std::vector<MTopDivResult> mtop_div(const PointCloud& x_p, const PointCloud& x_q, const MTopDivConfig& cfg) {
    std::vector<MTopDivResult> out;
    if (cfg.direction != Direction::qp) out.push_back(one_direction(x_p, x_q, cfg, "PQ"));
    if (cfg.direction != Direction::pq) out.push_back(one_direction(x_q, x_p, cfg, "QP"));
    return out;
}

RLTHistogram rlt(const std::vector<Interval>& intervals, double alpha_max) {
    if (!(alpha_max > 0.0) || std::isinf(alpha_max)) throw InvalidInput("rlt: alpha_max must be positive and finite");
    struct Event {
        double at;
        int delta;
    };
    std::vector<Event> events;
    events.reserve(2 * intervals.size());
    for (const Interval& i : intervals) {
        if (!(i.death <= alpha_max)) throw InvalidInput("rlt: interval dies after alpha_max");
        events.push_back({i.birth, +1});
        events.push_back({i.death, -1});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.at < b.at; });

    RLTHistogram h;
    h.alpha_max = alpha_max;
    double cursor = 0.0;
    long alive = 0;
    for (std::size_t e = 0; e < events.size();) {
        const double at = events[e].at;
        if (at > cursor) {
            h.mass[static_cast<std::size_t>(alive)] += (at - cursor) / alpha_max;
            cursor = at;
        }
        for (; e < events.size() && events[e].at == at; ++e) alive += events[e].delta;
    }
    if (alpha_max > cursor) h.mass[static_cast<std::size_t>(alive)] += (alpha_max - cursor) / alpha_max;
    return h;
}

RLTHistogram rlt(const std::vector<Interval>& intervals) {
    double alpha_max = 0.0;
    for (const Interval& i : intervals) alpha_max = std::max(alpha_max, i.death);
    return rlt(intervals, alpha_max > 0.0 ? alpha_max : 1.0);
}

double emd_to_empty(const RLTHistogram& histogram) {
    double emd = 0.0;
    for (const auto& [k, mass] : histogram.mass) emd += static_cast<double>(k) * mass;
    return emd;
}

}  // namespace mtd
