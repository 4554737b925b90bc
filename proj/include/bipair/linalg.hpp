#pragma once

#include <vector>

#include "bipair/rational.hpp"

namespace bipair {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

/// In-place reduced row echelon form; returns pivot column of each pivot row.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline size_t rank(Mat m) { return rref(m).size(); }

/// Canonical nullspace basis (one vector per free column, entry 1 there).
inline std::vector<Vec> nullspace(Mat m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -m[pr][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Vec mat_apply(const Mat& m, const Vec& x) {
    Vec out(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
    return out;
}

/// Solves m x = b exactly; throws if the system is singular/inconsistent.
inline Vec solve(Mat m, Vec b) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    if (pivots.size() != n) throw std::runtime_error("solve: singular system");
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != static_cast<int>(i)) throw std::runtime_error("solve: singular system");
    Vec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

}  // namespace bipair
