#include "toriclog/qmatrix.hpp"

#include <cassert>

namespace toriclog {

std::vector<std::size_t> row_reduce(QMat& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t q_rank(QMat m) { return row_reduce(m).size(); }

QMat q_nullspace(QMat m) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<std::size_t> pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    QMat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m[p][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> q_solve(const QMat& a, const QVec& b) {
    assert(a.size() == b.size());
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    QMat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    std::vector<std::size_t> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    QVec x(cols, Rational(0));
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug[p][cols];
    return x;
}

bool q_in_span(const QMat& rows, const QVec& v) {
    QMat m = rows;
    std::size_t base = q_rank(m);
    m.push_back(v);
    return q_rank(m) == base;
}

}  // namespace toriclog
