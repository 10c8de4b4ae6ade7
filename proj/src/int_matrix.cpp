#include "toriclog/int_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace toriclog {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
    std::vector<Integer> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

std::vector<Integer> IntMatrix::col(std::size_t j) const {
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    IntMatrix m(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) m.at(i, j) += a * rhs.at(k, j);
        }
    return m;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
    assert(v.size() == cols_);
    std::vector<Integer> out(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += q * at(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += q * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

namespace {

// Smallest nonzero |entry| in s[t.., t..], ties by lowest (row, col).
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Integer& x = s.at(i, j);
            if (x == 0) continue;
            Integer a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition d;
    d.s = a;
    d.u = IntMatrix::identity(a.rows());
    d.v = IntMatrix::identity(a.cols());
    IntMatrix& s = d.s;

    const std::size_t mn = std::min(a.rows(), a.cols());
    std::size_t t = 0;
    while (t < mn) {
        std::size_t pi, pj;
        if (!find_pivot(s, t, pi, pj)) break;
        s.swap_rows(t, pi);
        d.u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        d.v.swap_cols(t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            // clear column t; a nonzero remainder is strictly smaller than the
            // pivot, so swapping it up makes progress
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Integer q = div_floor(s.at(i, t), s.at(t, t));
                s.add_row_multiple(i, t, -q);
                d.u.add_row_multiple(i, t, -q);
                if (s.at(i, t) != 0) {
                    s.swap_rows(t, i);
                    d.u.swap_rows(t, i);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Integer q = div_floor(s.at(t, j), s.at(t, t));
                s.add_col_multiple(j, t, -q);
                d.v.add_col_multiple(j, t, -q);
                if (s.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    d.v.swap_cols(t, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            // pivot must divide the rest of the submatrix; if not, fold the
            // offending row into row t and keep reducing
            for (std::size_t i = t + 1; i < s.rows() && settled; ++i)
                for (std::size_t j = t + 1; j < s.cols() && settled; ++j)
                    if (!divides(s.at(t, t), s.at(i, j))) {
                        s.add_row_multiple(t, i, Integer(1));
                        d.u.add_row_multiple(t, i, Integer(1));
                        settled = false;
                    }
        }
        ++t;
    }
    d.rank = t;
    for (std::size_t i = 0; i < t; ++i)
        if (s.at(i, i) < 0) {
            s.negate_row(i);
            d.u.negate_row(i);
        }
    return d;
}

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& a) {
    SmithDecomposition d = smith_normal_form(a);
    std::vector<std::vector<Integer>> basis;
    for (std::size_t j = d.rank; j < a.cols(); ++j) basis.push_back(d.v.col(j));
    return basis;
}

std::optional<std::vector<Integer>> integer_solve(const IntMatrix& a,
                                                  const std::vector<Integer>& b) {
    assert(b.size() == a.rows());
    SmithDecomposition d = smith_normal_form(a);
    std::vector<Integer> c = d.u.apply(b);
    std::vector<Integer> y(a.cols(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < d.rank) {
            if (!divides(d.s.at(i, i), c[i])) return std::nullopt;
            y[i] = div_exact(c[i], d.s.at(i, i));
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return d.v.apply(y);
}

namespace {

// Fraction-free elimination; returns pivoted row count and, for square full
// rank input, leaves the signed determinant in det_out.
std::size_t bareiss(IntMatrix m, Integer* det_out) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            m.swap_rows(p, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) = div_exact(m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j), prev);
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    if (det_out) *det_out = (r == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
    return r;
}

}  // namespace

std::size_t rank(const IntMatrix& a) { return bareiss(a, nullptr); }

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (a.rows() == 0) return 1;
    Integer det;
    bareiss(a, &det);
    return det;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    const std::size_t n = u.rows();
    if (u.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    // Gauss-Jordan over Q on [u | I]; the result must be integral
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(u.at(i, j));
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("matrix is singular");
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m[i][n + j];
            if (x.get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
            out.at(i, j) = x.get_num();
        }
    return out;
}

IntMatrix hermite_row_basis(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd out column c below row r
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (m.at(i, c) == 0) continue;
                if (best == rows || abs(m.at(i, c)) < abs(m.at(best, c))) best = i;
            }
            if (best == rows) break;
            m.swap_rows(r, best);
            bool clear = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m.at(i, c) == 0) continue;
                Integer q = div_floor(m.at(i, c), m.at(r, c));
                m.add_row_multiple(i, r, -q);
                if (m.at(i, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (m.at(r, c) == 0) continue;
        if (m.at(r, c) < 0) m.negate_row(r);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = div_floor(m.at(i, c), m.at(r, c));
            m.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

}  // namespace toriclog
