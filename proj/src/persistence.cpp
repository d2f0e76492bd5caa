#include "mtopdiv/persistence.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>

#include "mtopdiv/errors.hpp"
#include "union_find.hpp"

namespace mtd {

bool interval_less(const Interval& a, const Interval& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
}

void Barcode::add(const Interval& interval) {
    if (interval.birth == interval.death) return;
    dims_.at(interval.dim).push_back(interval);
}

void Barcode::normalize() {
    for (auto& intervals : dims_) std::sort(intervals.begin(), intervals.end(), interval_less);
}

std::size_t Barcode::total_size() const {
    std::size_t total = 0;
    for (const auto& intervals : dims_) total += intervals.size();
    return total;
}

std::size_t alive_count(const std::vector<Interval>& intervals, double alpha) {
    return static_cast<std::size_t>(
        std::count_if(intervals.begin(), intervals.end(), [alpha](const Interval& i) { return i.alive_at(alpha); }));
}

namespace {

using Column = std::vector<std::size_t>;

std::vector<Column> boundary_columns(const Filtration& f, std::size_t top_dim) {
    std::map<std::vector<Vertex>, std::size_t> position;
    for (std::size_t i = 0; i < f.simplices.size(); ++i) position.emplace(f.simplices[i].vertices, i);

    std::vector<Column> columns(f.simplices.size());
    std::vector<Vertex> facet;
    for (std::size_t j = 0; j < f.simplices.size(); ++j) {
        const auto& s = f.simplices[j];
        if (s.dim() == 0 || s.dim() > top_dim) continue;
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            facet.clear();
            for (std::size_t k = 0; k < s.vertices.size(); ++k) {
                if (k != drop) facet.push_back(s.vertices[k]);
            }
            const auto it = position.find(facet);
            if (it == position.end() || it->second >= j) {
                throw InvalidInput("filtration is not closed under faces or lists a coface before its face");
            }
            columns[j].push_back(it->second);
        }
        std::sort(columns[j].begin(), columns[j].end());
    }
    return columns;
}

void add_column(Column& target, const Column& source, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

}  // namespace

std::vector<PersistencePair> persistence_pairs(const Filtration& f, std::size_t max_hom_dim, ReductionMode mode) {
    const std::size_t m = f.simplices.size();
    const std::size_t top_dim = max_hom_dim + 1;
    std::vector<Column> columns = boundary_columns(f, top_dim);

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> low_owner(m, kNone);  // row -> column whose pivot it is
    std::vector<std::size_t> death_of(m, kNone);   // birth simplex -> death simplex
    std::vector<bool> negative(m, false);
    std::vector<bool> cleared(m, false);
    Column scratch;

    auto reduce_column = [&](std::size_t j) {
        Column& col = columns[j];
        while (!col.empty() && low_owner[col.back()] != kNone) add_column(col, columns[low_owner[col.back()]], scratch);
        if (col.empty()) return;
        const std::size_t low = col.back();
        low_owner[low] = j;
        death_of[low] = j;
        negative[j] = true;
        if (mode == ReductionMode::clearing) cleared[low] = true;
    };

    if (mode == ReductionMode::plain) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t d = f.simplices[j].dim();
            if (d >= 1 && d <= top_dim) reduce_column(j);
        }
    } else {
        for (std::size_t d = top_dim; d >= 1; --d) {
            for (std::size_t j = 0; j < m; ++j) {
                if (f.simplices[j].dim() == d && !cleared[j]) reduce_column(j);
            }
        }
    }

    std::vector<PersistencePair> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        if (f.simplices[i].dim() > max_hom_dim || negative[i]) continue;
        if (death_of[i] != kNone) {
            pairs.push_back({i, death_of[i]});
        } else {
            pairs.push_back({i, std::nullopt});
        }
    }
    return pairs;
}

Barcode reduce(const Filtration& f, std::size_t max_hom_dim, ReductionMode mode) {
    const bool complete = f.num_vertices > 0 && f.max_dim + 1 == f.num_vertices;
    if (f.max_dim < max_hom_dim + 1 && !complete) {
        throw InvalidInput("reduce: filtration of max_dim " + std::to_string(f.max_dim) +
                           " cannot resolve homology in dimension " + std::to_string(max_hom_dim));
    }
    Barcode barcode(max_hom_dim);
    for (const auto& pair : persistence_pairs(f, max_hom_dim, mode)) {
        const Simplex& born = f.simplices[pair.birth];
        Interval interval{born.value, kInfinity, born.dim(), false};
        if (pair.death) {
            interval.death = f.simplices[*pair.death].value;
        } else if (f.threshold) {
            interval.death = *f.threshold;
            interval.truncated = true;
        }
        barcode.add(interval);
    }
    barcode.normalize();
    return barcode;
}

Barcode h0_union_find(const DistanceMatrix& weights, std::optional<double> threshold) {
    const std::size_t n = weights.size();
    struct Edge {
        double weight;
        std::size_t u, v;
    };
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = weights(i, j);
            if (!threshold || w <= *threshold) edges.push_back({w, i, j});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });

    Barcode barcode(0);
    detail::UnionFind components(n);
    std::size_t merges = 0;
    for (const Edge& e : edges) {
        if (components.link(e.u, e.v)) {
            barcode.add({0.0, e.weight, 0, false});
            ++merges;
        }
    }
    for (std::size_t c = merges; c < n; ++c) {
        if (threshold) {
            barcode.add({0.0, *threshold, 0, true});
        } else {
            barcode.add({0.0, kInfinity, 0, false});
        }
    }
    barcode.normalize();
    return barcode;
}

}  // namespace mtd
