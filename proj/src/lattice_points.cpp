#include "toriclog/lattice_points.hpp"

#include "toriclog/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace toriclog {

namespace {

// row[0] + sum_i row[i] * t_i >= 0
using Row = std::vector<Integer>;

Row normalized(Row r) {
    Integer g = 0;
    for (const auto& x : r) g = int_gcd(g, x);
    if (g > 1)
        for (auto& x : r) x = div_exact(x, g);
    return r;
}

bool vars_all_zero(const Row& r) {
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0) return false;
    return true;
}

// Fourier-Motzkin step: drop variable col, pairing rows of opposite sign.
// Trivially true rows are discarded; duplicates collapse via the set.
std::vector<Row> eliminate_col(const std::vector<Row>& rows, std::size_t col) {
    std::vector<Row> pos, neg;
    std::set<Row> kept;
    auto push = [&](Row r) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(col));
        if (vars_all_zero(r) && r[0] >= 0) return;
        kept.insert(normalized(std::move(r)));
    };
    for (const Row& r : rows) {
        int s = sgn(r[col]);
        if (s == 0) push(r);
        else if (s > 0) pos.push_back(r);
        else neg.push_back(r);
    }
    for (const Row& u : pos)
        for (const Row& v : neg) {
            Row w(u.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = u[i] * (-v[col]) + v[i] * u[col];
            push(std::move(w));
        }
    return {kept.begin(), kept.end()};
}

bool has_false_constant(const std::vector<Row>& rows) {
    for (const Row& r : rows)
        if (vars_all_zero(r) && r[0] < 0) return true;
    return false;
}

}  // namespace

std::optional<std::vector<std::vector<Integer>>> nonnegative_points(
    const IntMatrix& basis, const std::vector<Integer>& particular) {
    const std::size_t m = basis.rows();
    const std::size_t k = basis.cols();
    assert(particular.size() == m);

    std::vector<std::vector<Integer>> out;
    if (k == 0) {
        bool ok = std::all_of(particular.begin(), particular.end(),
                              [](const Integer& x) { return x >= 0; });
        if (ok) out.push_back(particular);
        return out;
    }

    std::vector<Row> full(m, Row(k + 1));
    for (std::size_t i = 0; i < m; ++i) {
        full[i][0] = particular[i];
        for (std::size_t j = 0; j < k; ++j) full[i][j + 1] = basis.at(i, j);
    }

    // chain[j] constrains t_1..t_j; chain[0] decides real feasibility.
    // An empty polytope beats the unboundedness report below.
    std::vector<std::vector<Row>> chain(k + 1);
    chain[k] = full;
    for (std::size_t j = k; j > 0; --j) chain[j - 1] = eliminate_col(chain[j], j);
    for (const auto& sys : chain)
        if (has_false_constant(sys)) return out;

    // the point set is infinite iff the recession cone {t : basis t >= 0} has
    // a nonzero direction, i.e. some coordinate projection is not {0}
    std::vector<Row> homo = full;
    for (Row& r : homo) r[0] = 0;
    for (std::size_t v = 1; v <= k; ++v) {
        std::vector<Row> sys = homo;
        for (std::size_t c = k; c > 0; --c)
            if (c != v) sys = eliminate_col(sys, c);
        bool has_pos = false, has_neg = false;
        for (const Row& r : sys) {
            if (r[1] > 0) has_pos = true;
            if (r[1] < 0) has_neg = true;
        }
        if (!has_pos || !has_neg) return std::nullopt;
    }

    std::vector<Integer> t(k);
    std::function<void(std::size_t)> walk = [&](std::size_t j) {
        if (j > k) {
            std::vector<Integer> pt(m);
            for (std::size_t i = 0; i < m; ++i) {
                Integer s = particular[i];
                for (std::size_t q = 0; q < k; ++q) s += basis.at(i, q) * t[q];
                assert(s >= 0);
                pt[i] = std::move(s);
            }
            out.push_back(std::move(pt));
            return;
        }
        bool lo_set = false, hi_set = false, dead = false;
        Integer lo, hi;
        for (const Row& r : chain[j]) {
            Integer rest = r[0];
            for (std::size_t q = 1; q < j; ++q) rest += r[q] * t[q - 1];
            const Integer& c = r[j];
            if (c == 0) {
                if (rest < 0) { dead = true; break; }
            } else if (c > 0) {
                Integer b = rat_ceil(make_rational(-rest, c));
                if (!lo_set || b > lo) { lo = std::move(b); lo_set = true; }
            } else {
                Integer b = rat_floor(make_rational(rest, -c));
                if (!hi_set || b < hi) { hi = std::move(b); hi_set = true; }
            }
        }
        if (dead) return;
        // a bounded polytope projects to bounded intervals at every level
        assert(lo_set && hi_set);
        for (Integer val = lo; val <= hi; ++val) {
            t[j - 1] = val;
            walk(j + 1);
        }
    };
    walk(1);
    return out;
}

}  // namespace toriclog
