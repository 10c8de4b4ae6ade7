#include "toriclog/syzygy.hpp"

#include <map>

#include "toriclog/qmatrix.hpp"

namespace toriclog {

namespace {

// unknowns are coefficients over per-slot monomial bases, ordered slot by slot
struct UnknownLayout {
    std::vector<std::vector<Exponent>> bases;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;

    void add_slot(std::vector<Exponent> basis) {
        offsets.push_back(total);
        total += basis.size();
        bases.push_back(std::move(basis));
    }
};

// accumulate coefficient rows of (sum over unknowns of x^m * factor) == 0,
// one block of rows per target monomial actually reached
struct EquationBlock {
    std::map<Exponent, std::size_t, GradedLexLess> row_of;
    QMat rows;
    std::size_t width;

    explicit EquationBlock(std::size_t w) : width(w) {}

    void add_products(std::size_t column_base, const std::vector<Exponent>& basis,
                      const Polynomial& factor) {
        if (factor.is_zero()) return;
        std::size_t nv = factor.nvars();
        for (std::size_t m = 0; m < basis.size(); ++m) {
            Polynomial prod = Polynomial::monomial(nv, basis[m], 1) * factor;
            for (const auto& [e, c] : prod.terms()) {
                auto it = row_of.find(e);
                if (it == row_of.end()) {
                    it = row_of.emplace(e, rows.size()).first;
                    rows.emplace_back(width, Rational(0));
                }
                rows[it->second][column_base + m] += c;
            }
        }
    }
};

SyzygyVector assemble(const ToricData& td, const UnknownLayout& layout, const QVec& sol,
                      const ClassElement& kappa, SyzygyKind kind) {
    SyzygyVector out;
    out.degree = kappa;
    out.kind = kind;
    std::size_t r = td.ray_count();
    for (std::size_t i = 0; i < r; ++i) {
        Polynomial p(r);
        for (std::size_t m = 0; m < layout.bases[i].size(); ++m) {
            const Rational& c = sol[layout.offsets[i] + m];
            if (c != 0) p.set_coefficient(layout.bases[i][m], c);
        }
        out.body.push_back(std::move(p));
    }
    return out;
}

SyzygySpace solve_space(const ToricData& td, const std::vector<Polynomial>& f,
                        const ClassElement& kappa, bool extended) {
    SyzygySpace out;
    out.degree = kappa;
    out.kind = extended ? SyzygyKind::Extended : SyzygyKind::Plain;
    out.target = f;

    std::size_t r = td.ray_count();
    UnknownLayout layout;
    for (std::size_t i = 0; i < r; ++i)
        layout.add_slot(td.monomial_basis(td.class_map().add(kappa, td.degree(i))));
    if (extended) layout.add_slot(td.monomial_basis(kappa));
    if (layout.total == 0) return out;

    QMat system;
    for (const Polynomial& ft : f) {
        EquationBlock block(layout.total);
        for (std::size_t i = 0; i < r; ++i)
            block.add_products(layout.offsets[i], layout.bases[i], ft.derivative(i));
        if (extended) block.add_products(layout.offsets[r], layout.bases[r], ft);
        for (auto& row : block.rows) system.push_back(std::move(row));
    }
    if (system.empty()) system.emplace_back(layout.total, Rational(0));

    for (const QVec& sol : q_nullspace(system))
        out.basis.push_back(assemble(td, layout, sol, kappa, out.kind));
    return out;
}

}  // namespace

PolyVector gradient(const ToricData& td, const Polynomial& f) {
    PolyVector out;
    for (std::size_t i = 0; i < td.ray_count(); ++i) out.push_back(f.derivative(i));
    return out;
}

std::vector<PolyVector> jacobian(const ToricData& td, const std::vector<Polynomial>& f) {
    std::vector<PolyVector> out;
    for (const Polynomial& p : f) out.push_back(gradient(td, p));
    return out;
}

bool euler_relation_check(const ToricData& td, const Polynomial& f, std::size_t j) {
    ClassElement beta = td.homogeneous_degree(f);
    std::size_t r = td.ray_count();
    Polynomial lhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        Rational w(td.degree(i).free.at(j));
        lhs = lhs + (Polynomial::variable(r, i) * f.derivative(i)).scale(w);
    }
    return lhs == f.scale(Rational(beta.free.at(j)));
}

SyzygySpace syzygy_basis(const ToricData& td, const std::vector<Polynomial>& f,
                         const ClassElement& kappa) {
    for (const Polynomial& p : f) td.homogeneous_degree(p);
    return solve_space(td, f, kappa, false);
}

SyzygySpace extended_syzygy_basis(const ToricData& td, const Polynomial& f,
                                  const ClassElement& kappa) {
    td.homogeneous_degree(f);
    return solve_space(td, {f}, kappa, true);
}

bool is_syzygy(const ToricData& td, const std::vector<Polynomial>& f, const SyzygyVector& v) {
    std::size_t r = td.ray_count();
    if (v.body.size() != r) return false;
    for (const Polynomial& ft : f) {
        Polynomial rel(r);
        for (std::size_t i = 0; i < r; ++i) rel = rel + v.body[i] * ft.derivative(i);
        if (rel.is_zero()) continue;
        if (v.kind == SyzygyKind::Plain || f.size() != 1) return false;
        try {
            exact_divide(rel, ft);
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

bool syzygy_degrees_consistent(const ToricData& td, const SyzygyVector& v) {
    if (v.body.size() != td.ray_count()) return false;
    for (std::size_t i = 0; i < v.body.size(); ++i) {
        if (v.body[i].is_zero()) continue;
        ClassElement want = td.class_map().add(v.degree, td.degree(i));
        try {
            if (!(td.homogeneous_degree(v.body[i]) == want)) return false;
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

std::size_t symbolic_rank(const std::vector<PolyVector>& rows) {
    std::vector<PolyVector> m = rows;
    if (m.empty() || m[0].empty()) return 0;
    std::size_t nr = m.size(), nc = m[0].size(), nv = m[0][0].nvars();
    Polynomial prev = Polynomial::constant(nv, 1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = nr;
        for (std::size_t i = rank; i < nr; ++i) {
            if (m[i][col].is_zero()) continue;
            if (pivot == nr || m[i][col].term_count() < m[pivot][col].term_count()) pivot = i;
        }
        if (pivot == nr) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                m[i][j] = exact_divide(m[rank][col] * m[i][j] - m[i][col] * m[rank][j], prev);
            m[i][col] = Polynomial(nv);
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace toriclog
