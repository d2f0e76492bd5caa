// Vietoris-Rips persistence by cohomology with implicit coboundaries.
//
// Simplices are encoded in the combinatorial number system: vertices
// v_d > ... > v_0 map to sum_i C(v_i, i + 1). Within one dimension the
// filtration order is (diameter ascending, index descending); columns are
// reduced in the reverse of that order, and the pivot of a coboundary is its
// filtration-earliest cofacet.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>
#include <vector>

#include "mtopdiv/errors.hpp"
#include "mtopdiv/persistence.hpp"
#include "union_find.hpp"

namespace mtd {

namespace {

using index_t = std::int64_t;

struct Entry {
    double diameter;
    index_t index;
};

constexpr index_t kNoIndex = -1;

// Heap comparator: the top is the filtration-earliest entry.
struct LaterInFiltration {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.diameter != b.diameter) return a.diameter > b.diameter;
        return a.index < b.index;
    }
};

// Reduction order: latest in the filtration first.
bool reduce_before(const Entry& a, const Entry& b) {
    if (a.diameter != b.diameter) return a.diameter > b.diameter;
    return a.index < b.index;
}

using Heap = std::priority_queue<Entry, std::vector<Entry>, LaterInFiltration>;

class BinomialTable {
public:
    BinomialTable(index_t n, index_t k) : k_max_(k + 1), table_((n + 1) * (k + 1), 0) {
        for (index_t i = 0; i <= n; ++i) {
            for (index_t j = 0; j <= std::min(i, k); ++j) {
                at(i, j) = (j == 0 || j == i) ? 1 : at(i - 1, j - 1) + at(i - 1, j);
            }
        }
    }

    index_t operator()(index_t n, index_t k) const { return k >= k_max_ ? 0 : table_[n * k_max_ + k]; }

private:
    index_t& at(index_t n, index_t k) { return table_[n * k_max_ + k]; }

    index_t k_max_;
    std::vector<index_t> table_;
};

Entry pop_pivot(Heap& column) {
    while (!column.empty()) {
        const Entry pivot = column.top();
        column.pop();
        if (!column.empty() && column.top().index == pivot.index) {
            column.pop();
            continue;
        }
        return pivot;
    }
    return {0.0, kNoIndex};
}

Entry get_pivot(Heap& column) {
    const Entry pivot = pop_pivot(column);
    if (pivot.index != kNoIndex) column.push(pivot);
    return pivot;
}

class RipsCohomology {
public:
    RipsCohomology(const DistanceMatrix& weights, std::size_t max_hom_dim, std::optional<double> threshold)
        : w_(weights),
          n_(static_cast<index_t>(weights.size())),
          max_hom_dim_(static_cast<index_t>(max_hom_dim)),
          threshold_(threshold.value_or(kInfinity)),
          binomial_(n_, max_hom_dim_ + 2),
          barcode_(max_hom_dim) {}

    Barcode run() {
        std::vector<Entry> columns;
        compute_dim0(columns);
        for (index_t dim = 1; dim <= max_hom_dim_; ++dim) {
            std::unordered_map<index_t, std::size_t> pivots;
            pivots.reserve(columns.size());
            compute_pairs(columns, pivots, dim);
            if (dim < max_hom_dim_) assemble_columns(columns, pivots, dim + 1);
        }
        barcode_.normalize();
        return std::move(barcode_);
    }

private:
    void emit(std::size_t dim, double birth, double death) {
        if (death == kInfinity && threshold_ != kInfinity) {
            barcode_.add({birth, threshold_, dim, true});
        } else {
            barcode_.add({birth, death, dim, false});
        }
    }

    // Largest w <= top with C(w, k) <= idx.
    index_t max_vertex(index_t idx, index_t k, index_t top) const {
        index_t lo = k - 1;
        while (lo < top) {
            const index_t mid = top - (top - lo) / 2;
            if (binomial_(mid, k) <= idx) {
                lo = mid;
            } else {
                top = mid - 1;
            }
        }
        return lo;
    }

    void simplex_vertices(index_t idx, index_t dim, std::vector<index_t>& out) const {
        out.clear();
        index_t top = n_ - 1;
        for (index_t k = dim + 1; k > 0; --k) {
            top = max_vertex(idx, k, top);
            out.push_back(top);
            idx -= binomial_(top, k);
            --top;
        }
    }

    double diameter(index_t idx, index_t dim) {
        simplex_vertices(idx, dim, scratch_vertices_);
        double diam = 0.0;
        for (std::size_t i = 0; i < scratch_vertices_.size(); ++i) {
            const auto row = w_.row(static_cast<std::size_t>(scratch_vertices_[i]));
            for (std::size_t j = 0; j < i; ++j) diam = std::max(diam, row[static_cast<std::size_t>(scratch_vertices_[j])]);
        }
        return diam;
    }

    // Visits cofacets of `simplex` in decreasing index order.
    class CofacetEnumerator {
    public:
        CofacetEnumerator(const RipsCohomology& parent, Entry simplex, index_t dim)
            : parent_(parent), simplex_(simplex), idx_below_(simplex.index), v_(parent.n_ - 1), k_(dim + 1) {
            parent.simplex_vertices(simplex.index, dim, vertices_);
        }

        bool has_next() {
            while (v_ >= 0 && parent_.binomial_(v_, k_) <= idx_below_) {
                idx_below_ -= parent_.binomial_(v_, k_);
                idx_above_ += parent_.binomial_(v_, k_ + 1);
                --v_;
                --k_;
            }
            return v_ >= 0;
        }

        Entry next() {
            const auto row = parent_.w_.row(static_cast<std::size_t>(v_));
            double diam = simplex_.diameter;
            for (index_t u : vertices_) diam = std::max(diam, row[static_cast<std::size_t>(u)]);
            const index_t index = idx_above_ + parent_.binomial_(v_, k_ + 1) + idx_below_;
            --v_;
            return {diam, index};
        }

    private:
        const RipsCohomology& parent_;
        Entry simplex_;
        index_t idx_below_;
        index_t idx_above_ = 0;
        index_t v_;
        index_t k_;
        std::vector<index_t> vertices_;
    };

    void compute_dim0(std::vector<Entry>& columns) {
        std::vector<Entry> edges;
        edges.reserve(static_cast<std::size_t>(binomial_(n_, 2)));
        for (index_t j = 1; j < n_; ++j) {
            const auto row = w_.row(static_cast<std::size_t>(j));
            for (index_t i = 0; i < j; ++i) {
                const double d = row[static_cast<std::size_t>(i)];
                if (d <= threshold_) edges.push_back({d, binomial_(j, 2) + i});
            }
        }
        // Filtration order; reversing afterwards yields the reduction order.
        std::sort(edges.begin(), edges.end(), [](const Entry& a, const Entry& b) { return reduce_before(b, a); });

        detail::UnionFind components(static_cast<std::size_t>(n_));
        std::vector<index_t> vertices;
        std::size_t merges = 0;
        columns.clear();
        for (const Entry& e : edges) {
            simplex_vertices(e.index, 1, vertices);
            if (components.link(static_cast<std::size_t>(vertices[0]), static_cast<std::size_t>(vertices[1]))) {
                emit(0, 0.0, e.diameter);
                ++merges;
            } else {
                columns.push_back(e);
            }
        }
        for (std::size_t c = merges; c < static_cast<std::size_t>(n_); ++c) emit(0, 0.0, kInfinity);
        std::reverse(columns.begin(), columns.end());
    }

    void assemble_columns(std::vector<Entry>& columns, const std::unordered_map<index_t, std::size_t>& pivots,
                          index_t dim) {
        columns.clear();
        const index_t count = binomial_(n_, dim + 1);
        for (index_t idx = 0; idx < count; ++idx) {
            if (pivots.contains(idx)) continue;
            const double d = diameter(idx, dim);
            if (d <= threshold_) columns.push_back({d, idx});
        }
        std::sort(columns.begin(), columns.end(), reduce_before);
    }

    // Pushes the coboundary of `simplex`; returns an emergent pivot early
    // when the filtration-earliest cofacet shares the simplex diameter and is
    // still unclaimed.
    Entry init_coboundary(Entry simplex, index_t dim, Heap& coboundary,
                          const std::unordered_map<index_t, std::size_t>& pivots) {
        bool check_emergent = true;
        cofacet_entries_.clear();
        CofacetEnumerator cofacets(*this, simplex, dim);
        while (cofacets.has_next()) {
            const Entry cofacet = cofacets.next();
            if (cofacet.diameter > threshold_) continue;
            if (check_emergent && cofacet.diameter == simplex.diameter) {
                if (!pivots.contains(cofacet.index)) return cofacet;
                check_emergent = false;
            }
            cofacet_entries_.push_back(cofacet);
        }
        for (const Entry& e : cofacet_entries_) coboundary.push(e);
        return get_pivot(coboundary);
    }

    void add_coboundary(Entry simplex, index_t dim, Heap& coboundary) {
        CofacetEnumerator cofacets(*this, simplex, dim);
        while (cofacets.has_next()) {
            const Entry cofacet = cofacets.next();
            if (cofacet.diameter <= threshold_) coboundary.push(cofacet);
        }
    }

    void compute_pairs(const std::vector<Entry>& columns, std::unordered_map<index_t, std::size_t>& pivots,
                       index_t dim) {
        // reduction_[bounds_[i] .. bounds_[i + 1]) lists the simplices added to
        // column i, besides column i itself.
        std::vector<std::size_t> bounds{0};
        std::vector<Entry> reduction;
        std::vector<Entry> added;

        for (std::size_t i = 0; i < columns.size(); ++i) {
            const Entry column = columns[i];
            Heap coboundary;
            added.clear();

            Entry pivot = init_coboundary(column, dim, coboundary, pivots);
            while (pivot.index != kNoIndex) {
                const auto owner = pivots.find(pivot.index);
                if (owner == pivots.end()) break;
                const std::size_t j = owner->second;
                added.push_back(columns[j]);
                add_coboundary(columns[j], dim, coboundary);
                for (std::size_t r = bounds[j]; r < bounds[j + 1]; ++r) {
                    added.push_back(reduction[r]);
                    add_coboundary(reduction[r], dim, coboundary);
                }
                pivot = get_pivot(coboundary);
            }

            if (pivot.index == kNoIndex) {
                emit(static_cast<std::size_t>(dim), column.diameter, kInfinity);
            } else {
                emit(static_cast<std::size_t>(dim), column.diameter, pivot.diameter);
                pivots.emplace(pivot.index, i);
                // Z/2: keep simplices added an odd number of times.
                std::sort(added.begin(), added.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
                for (std::size_t r = 0; r < added.size();) {
                    std::size_t s = r;
                    while (s < added.size() && added[s].index == added[r].index) ++s;
                    if ((s - r) % 2 == 1) reduction.push_back(added[r]);
                    r = s;
                }
            }
            bounds.push_back(reduction.size());
        }
    }

    const DistanceMatrix& w_;
    index_t n_;
    index_t max_hom_dim_;
    double threshold_;
    BinomialTable binomial_;
    Barcode barcode_;
    std::vector<index_t> scratch_vertices_;
    std::vector<Entry> cofacet_entries_;
};

}  // namespace

Barcode rips_barcode(const DistanceMatrix& weights, std::size_t max_hom_dim, std::optional<double> threshold) {
    if (threshold && (std::isnan(*threshold) || *threshold < 0.0)) {
        throw InvalidInput("rips_barcode: threshold must be nonnegative");
    }
    return RipsCohomology(weights, max_hom_dim, threshold).run();
}

}  // namespace mtd
