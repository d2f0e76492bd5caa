#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mtopdiv/errors.hpp"
#include "mtopdiv/persistence.hpp"

namespace mtd {

namespace {

using Mask = std::uint32_t;
using BitRow = std::vector<std::uint64_t>;

// Vertex subsets of the given size that form a clique at alpha, in
// increasing mask order.
std::vector<Mask> cliques(const DistanceMatrix& w, double alpha, std::size_t size) {
    std::vector<Mask> out;
    const std::size_t n = w.size();
    if (size == 0 || size > n) return out;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) != size) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(m >> i & 1U)) continue;
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if ((m >> j & 1U) && w(i, j) > alpha) ok = false;
            }
        }
        if (ok) out.push_back(m);
    }
    return out;
}

std::size_t rank_mod2(std::vector<BitRow> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t words = rows.front().size();
    for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][word] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r][word] & bit)) {
                for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

// Rank of the boundary map from simplices of `size` vertices to their facets.
std::size_t boundary_rank(const DistanceMatrix& w, double alpha, std::size_t size) {
    if (size < 2) return 0;
    const auto simplices = cliques(w, alpha, size);
    const auto facets = cliques(w, alpha, size - 1);
    if (simplices.empty() || facets.empty()) return 0;
    std::vector<BitRow> rows;
    rows.reserve(simplices.size());
    const std::size_t words = (facets.size() + 63) / 64;
    for (Mask s : simplices) {
        BitRow row(words, 0);
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            const Mask facet = s & ~(rest & (0 - rest));
            const auto it = std::lower_bound(facets.begin(), facets.end(), facet);
            const auto col = static_cast<std::size_t>(it - facets.begin());
            row[col / 64] |= std::uint64_t{1} << (col % 64);
        }
        rows.push_back(std::move(row));
    }
    return rank_mod2(std::move(rows));
}

}  // namespace

std::size_t betti_oracle(const DistanceMatrix& weights, double alpha, std::size_t k, std::size_t max_vertices) {
    if (weights.size() > max_vertices || weights.size() > 24) {
        throw InvalidInput("betti_oracle: " + std::to_string(weights.size()) + " points exceeds the oracle bound of " +
                           std::to_string(max_vertices));
    }
    const std::size_t k_simplices = cliques(weights, alpha, k + 1).size();
    const std::size_t cycles = k_simplices - boundary_rank(weights, alpha, k + 1);
    return cycles - boundary_rank(weights, alpha, k + 2);
}

}  // namespace mtd
