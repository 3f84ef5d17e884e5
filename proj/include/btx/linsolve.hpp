#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "btx/scalar.hpp"

namespace btx {

using Vec = std::vector<GaussianRational>;
using RowMatrix = std::vector<Vec>;

/// In-place reduced row echelon form; returns the pivot column of each
/// pivot row, in order.
inline std::vector<std::size_t> rref(RowMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        GaussianRational inv = GaussianRational::one() / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = inv * m[r][j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Solves sum_j x_j * columns[j] = target exactly. Returns nullopt when the
/// target is outside the column span; when the columns are linearly
/// independent the solution is unique.
inline std::optional<Vec> solve_in_span(const std::vector<Vec>& columns, const Vec& target) {
    const std::size_t k = columns.size(), mlen = target.size();
    RowMatrix aug(mlen, Vec(k + 1));
    for (std::size_t i = 0; i < mlen; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
        aug[i][k] = target[i];
    }
    auto pivots = rref(aug);
    // inconsistent iff some pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    Vec x(k);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug[pr][k];
    return x;
}

/// Basis of the right nullspace of the matrix (rows of equal length).
inline std::vector<Vec> nullspace(RowMatrix m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols);
        v[free_c] = GaussianRational::one();
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m[pr][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Greedy prune to a linearly independent subset, keeping first occurrences.
inline std::vector<std::size_t> independent_subset(const std::vector<Vec>& vecs) {
    std::vector<std::size_t> kept;
    RowMatrix reduced;  // kept in echelon form, zero rows dropped
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        RowMatrix trial = reduced;
        trial.push_back(vecs[i]);
        std::size_t rank = rref(trial).size();
        if (rank > reduced.size()) {
            trial.resize(rank);
            reduced = std::move(trial);
            kept.push_back(i);
        }
    }
    return kept;
}

}  // namespace btx
