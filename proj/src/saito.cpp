#include "toriclog/saito.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "toriclog/int_matrix.hpp"

namespace toriclog {

namespace {

// Memoized cofactor expansion along the column with the most zero entries.
// State is the pair of active row and column masks; fits small sparse inputs.
class CofactorDeterminant {
public:
    explicit CofactorDeterminant(const std::vector<PolyVector>& m)
        : m_(m), nvars_(m.empty() ? 0 : m[0][0].nvars()) {}

    Polynomial run() {
        std::uint32_t full = (1u << m_.size()) - 1;
        return det(full, full);
    }

private:
    Polynomial det(std::uint32_t rows, std::uint32_t cols) {
        if (std::popcount(rows) == 1)
            return m_[std::countr_zero(rows)][std::countr_zero(cols)];
        std::uint64_t key = (std::uint64_t(rows) << 16) | cols;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::uint32_t best_col = 0;
        std::size_t best_zeros = 0;
        bool have = false;
        for (std::uint32_t c = cols; c; c &= c - 1) {
            std::size_t col = std::countr_zero(c);
            std::size_t zeros = 0;
            for (std::uint32_t rr = rows; rr; rr &= rr - 1)
                if (m_[std::countr_zero(rr)][col].is_zero()) ++zeros;
            if (!have || zeros > best_zeros) {
                best_col = static_cast<std::uint32_t>(col);
                best_zeros = zeros;
                have = true;
            }
        }

        Polynomial out(nvars_);
        std::size_t pos = 0;
        std::size_t col_pos = index_in_mask(cols, best_col);
        for (std::uint32_t rr = rows; rr; rr &= rr - 1, ++pos) {
            std::size_t row = std::countr_zero(rr);
            const Polynomial& e = m_[row][best_col];
            if (e.is_zero()) continue;
            Polynomial sub = det(rows & ~(1u << row), cols & ~(1u << best_col));
            Polynomial term = e * sub;
            out = ((pos + col_pos) % 2 == 0) ? out + term : out - term;
        }
        memo_.emplace(key, out);
        return out;
    }

    static std::size_t index_in_mask(std::uint32_t mask, std::uint32_t bit) {
        return std::popcount(mask & ((1u << bit) - 1));
    }

    const std::vector<PolyVector>& m_;
    std::size_t nvars_;
    std::unordered_map<std::uint64_t, Polynomial> memo_;
};

Polynomial bareiss_determinant(std::vector<PolyVector> m) {
    std::size_t n = m.size();
    std::size_t nv = m[0][0].nvars();
    Polynomial prev = Polynomial::constant(nv, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            if (pivot == n || m[i][k].term_count() < m[pivot][k].term_count()) pivot = i;
        }
        if (pivot == n) return Polynomial(nv);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = Polynomial(nv);
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// shared column degree of a vector, inferred from its nonzero entries
ClassElement column_degree(const ToricData& td, const SyzygyVector& v, std::size_t j) {
    bool seen = false;
    ClassElement kappa = v.degree;
    for (std::size_t i = 0; i < v.body.size(); ++i) {
        if (v.body[i].is_zero()) continue;
        ClassElement entry;
        try {
            entry = td.homogeneous_degree(v.body[i]);
        } catch (const Error&) {
            throw NotASyzygyError(j + 1, "entry " + std::to_string(i + 1) +
                                             " is not homogeneous");
        }
        ClassElement shifted = td.class_map().subtract(entry, td.degree(i));
        if (seen && !(shifted == kappa))
            throw NotASyzygyError(j + 1, "entries do not share one shifted class");
        kappa = shifted;
        seen = true;
    }
    return kappa;
}

std::vector<PolyVector> assemble_rows(const ToricData& td, const std::vector<SyzygyVector>& nu,
                                      const std::vector<std::size_t>& euler) {
    std::size_t r = td.ray_count();
    std::vector<PolyVector> rows(r, PolyVector(r, Polynomial(r)));
    for (std::size_t j = 0; j < nu.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) rows[i][j] = nu[j].body[i];
    for (std::size_t t = 0; t < euler.size(); ++t)
        for (std::size_t i = 0; i < r; ++i)
            rows[i][nu.size() + t] =
                Polynomial::variable(r, i).scale(Rational(td.euler_rows().at(euler[t], i)));
    return rows;
}

void check_euler_selection(const ToricData& td, const std::vector<std::size_t>& euler) {
    for (std::size_t t = 0; t < euler.size(); ++t) {
        if (euler[t] >= td.picard_rank())
            throw Error("InvalidArgument", "scaling functional index out of range");
        for (std::size_t u = t + 1; u < euler.size(); ++u)
            if (euler[t] == euler[u])
                throw Error("InvalidArgument", "scaling functional repeated");
    }
}

std::string summand_name(const CokernelMap& cm, const ClassElement& e) {
    if (e.is_zero()) return "O";
    return "O(" + cm.negate(e).to_string() + ")";
}

Polynomial lift_variables(const Polynomial& p, std::size_t nvars) {
    Polynomial out(nvars);
    for (const auto& [e, c] : p.terms()) {
        Exponent ext = e;
        ext.resize(nvars, 0);
        out.set_coefficient(ext, c);
    }
    return out;
}

}  // namespace

Polynomial poly_determinant(const std::vector<PolyVector>& rows) {
    if (rows.empty()) return Polynomial::constant(0, 1);
    for (const auto& row : rows)
        if (row.size() != rows.size()) throw Error("InvalidArgument", "matrix is not square");
    if (rows.size() <= 12) return CofactorDeterminant(rows).run();
    return bareiss_determinant(rows);
}

Polynomial determinant(const SaitoMatrix& m) { return poly_determinant(m.rows); }

SaitoMatrix coefficient_matrix(const ToricData& td, const std::vector<SyzygyVector>& nu) {
    std::size_t n = td.ray_count() - td.picard_rank();
    if (nu.size() != n) throw wrong_syzygy_count(nu.size(), n, n);
    std::vector<std::size_t> euler(td.picard_rank());
    for (std::size_t j = 0; j < euler.size(); ++j) euler[j] = j;
    SaitoMatrix m;
    m.rows = assemble_rows(td, nu, euler);
    m.syzygy_count = n;
    return m;
}

SaitoCertificate saito_verify(const ToricData& td, const Polynomial& f,
                              const std::vector<SyzygyVector>& nu) {
    std::size_t n = td.ray_count() - td.picard_rank();
    if (nu.size() != n) throw wrong_syzygy_count(nu.size(), n, n);
    std::vector<std::size_t> euler(td.picard_rank());
    for (std::size_t j = 0; j < euler.size(); ++j) euler[j] = j;
    return saito_verify(td, f, nu, euler);
}

SaitoCertificate saito_verify(const ToricData& td, const Polynomial& f,
                              const std::vector<SyzygyVector>& nu,
                              const std::vector<std::size_t>& euler) {
    std::size_t r = td.ray_count();
    if (nu.size() + euler.size() != r)
        throw wrong_syzygy_count(nu.size(), r - euler.size(), r - euler.size());
    check_euler_selection(td, euler);

    SaitoCertificate cert;
    cert.divisor = f;
    cert.divisor_class = td.homogeneous_degree(f);
    cert.euler_columns = euler;
    cert.notes.push_back("reduced: user-asserted");

    const CokernelMap& cm = td.class_map();
    ClassElement sum_kappa = cm.zero();
    for (std::size_t j = 0; j < nu.size(); ++j) {
        SyzygyVector col = nu[j];
        col.degree = column_degree(td, col, j);
        if (!is_syzygy(td, {f}, col))
            throw NotASyzygyError(j + 1, "the defining relation fails against the divisor");
        sum_kappa = cm.add(sum_kappa, col.degree);
        cert.columns.push_back(std::move(col));
    }

    cert.determinant = poly_determinant(assemble_rows(td, cert.columns, euler));
    if (!cert.determinant.is_zero()) {
        ClassElement expect = cm.add(td.anticanonical(), sum_kappa);
        if (!(td.homogeneous_degree(cert.determinant) == expect))
            throw std::logic_error("determinant landed outside its forced class");
        try {
            Polynomial q = exact_divide(cert.determinant, f);
            if (q.is_constant()) {
                cert.factor = q.leading_term().second;
                cert.free = true;
            }
        } catch (const Error&) {
        }
    }

    for (std::size_t t = 0; t < euler.size(); ++t) cert.exponents.push_back(cm.zero());
    for (const auto& col : cert.columns) cert.exponents.push_back(col.degree);

    cert.surplus_class = cm.subtract(cm.add(td.anticanonical(), sum_kappa), cert.divisor_class);
    try {
        cert.surplus =
            td.is_effective(cert.surplus_class) ? Effectivity::Effective : Effectivity::NotEffective;
    } catch (const Error& e) {
        cert.surplus = Effectivity::Skipped;
        cert.notes.push_back("surplus effectivity skipped: " + std::string(e.what()));
    }

    bool all_vanish = !cert.columns.empty();
    for (std::size_t j = 0; j < cert.columns.size(); ++j) {
        bool ok = false;
        try {
            ok = td.h0_vanishes(cm.negate(cert.columns[j].degree));
        } catch (const Error& e) {
            cert.notes.push_back("vanishing check skipped for column " + std::to_string(j + 1) +
                                 ": " + std::string(e.what()));
        }
        cert.summand_vanishing.push_back(ok);
        all_vanish = all_vanish && ok;
    }

    if (cert.free && all_vanish) {
        std::string s;
        for (const auto& e : cert.exponents) {
            if (!s.empty()) s += " + ";
            s += summand_name(cm, e);
        }
        cert.splitting = s;
    }
    return cert;
}

std::pair<Polynomial, SaitoCertificate> braid_certificate(const ToricData& td) {
    if (!td.complete()) throw incomplete_variety("braid_certificate");
    std::size_t r = td.ray_count();
    std::size_t rho = td.picard_rank();

    std::vector<std::vector<std::size_t>> groups;
    std::vector<ClassElement> gdeg;
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t g = gdeg.size();
        for (std::size_t k = 0; k < gdeg.size(); ++k)
            if (gdeg[k] == td.degree(i)) {
                g = k;
                break;
            }
        if (g == gdeg.size()) {
            gdeg.push_back(td.degree(i));
            groups.emplace_back();
        }
        groups[g].push_back(i);
    }

    std::vector<std::size_t> big;
    for (std::size_t g = 0; g < groups.size(); ++g)
        if (groups[g].size() >= 2) big.push_back(g);
    if (big.empty()) throw Error("DegenerateBraid", "no two rays share a divisor class");

    Polynomial b = Polynomial::constant(r, 1);
    for (std::size_t g : big)
        for (std::size_t a = 0; a < groups[g].size(); ++a)
            for (std::size_t bb = a + 1; bb < groups[g].size(); ++bb)
                b = b * (Polynomial::variable(r, groups[g][a]) -
                         Polynomial::variable(r, groups[g][bb]));

    if (big.size() < rho) {
        SaitoCertificate cert;
        cert.divisor = b;
        cert.divisor_class = td.homogeneous_degree(b);
        cert.determinant = Polynomial(r);
        cert.notes.push_back("reduced: user-asserted");
        cert.notes.push_back("only " + std::to_string(big.size()) +
                             " variable groups of size at least two for " + std::to_string(rho) +
                             " scaling columns; the square matrix cannot be filled");
        return {b, cert};
    }

    const CokernelMap& cm = td.class_map();
    std::vector<SyzygyVector> cols;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& mem = groups[g];
        std::size_t m = mem.size();
        SyzygyVector indicator;
        indicator.body.assign(r, Polynomial(r));
        for (std::size_t i : mem) indicator.body[i] = Polynomial::constant(r, 1);
        indicator.degree = cm.negate(gdeg[g]);
        cols.push_back(std::move(indicator));
        if (m < 3) continue;

        // w_j = sum over group pairs of (x_a^j - x_b^j)/(x_a - x_b), a polynomial;
        // subtracting (w_j/e_g) x_k cancels the group Euler contribution
        Integer eg(m * (m - 1) / 2);
        for (std::size_t j = 2; j <= m - 1; ++j) {
            Polynomial w(r);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t bb = a + 1; bb < m; ++bb)
                    for (unsigned t = 0; t < j; ++t)
                        w = w + Polynomial::variable(r, mem[a]).pow(t) *
                                    Polynomial::variable(r, mem[bb]).pow(j - 1 - t);
            SyzygyVector power;
            power.body.assign(r, Polynomial(r));
            for (std::size_t i : mem)
                power.body[i] = Polynomial::variable(r, i).pow(j) +
                                (w * Polynomial::variable(r, i)).scale(make_rational(-1, eg));
            power.degree = cm.scale(Integer(j) - 1, gdeg[g]);
            cols.push_back(std::move(power));
        }
    }

    // extra degree groups beyond the functional count pair up with the first
    for (std::size_t extra = 0; extra + rho < big.size(); ++extra) {
        std::size_t g0 = big[0], gh = big[1 + extra];
        Integer e0(groups[g0].size() * (groups[g0].size() - 1) / 2);
        Integer eh(groups[gh].size() * (groups[gh].size() - 1) / 2);
        SyzygyVector combo;
        combo.body.assign(r, Polynomial(r));
        for (std::size_t i : groups[g0]) combo.body[i] = Polynomial::variable(r, i).scale(Rational(eh));
        for (std::size_t i : groups[gh])
            combo.body[i] = Polynomial::variable(r, i).scale(Rational(-e0));
        combo.degree = cm.zero();
        cols.push_back(std::move(combo));
    }

    return {b, saito_verify(td, b, cols)};
}

SaitoCertificate invariant_divisor_certificate(const ToricData& td, std::size_t s) {
    std::size_t r = td.ray_count();
    std::size_t rho = td.picard_rank();
    if (s < 1 || s > r)
        throw Error("InvalidArgument",
                    "s must lie between 1 and " + std::to_string(r) + ", got " + std::to_string(s));

    Polynomial f = Polynomial::constant(r, 1);
    for (std::size_t i = 0; i < s; ++i) f = f * Polynomial::variable(r, i);

    const CokernelMap& cm = td.class_map();
    std::vector<SyzygyVector> cols;
    for (std::size_t j = 0; j + 1 < s; ++j) {
        SyzygyVector chain;
        chain.body.assign(r, Polynomial(r));
        chain.body[j] = Polynomial::variable(r, j);
        chain.body[j + 1] = -Polynomial::variable(r, j + 1);
        chain.degree = cm.zero();
        cols.push_back(std::move(chain));
    }
    for (std::size_t i = s; i < r; ++i) {
        SyzygyVector unit;
        unit.body.assign(r, Polynomial(r));
        unit.body[i] = Polynomial::constant(r, 1);
        unit.degree = cm.negate(td.degree(i));
        cols.push_back(std::move(unit));
    }
    // column order fixes the determinant sign as (-1)^(r-s); flip one column
    // on even r so the reported determinant is (-1)^(s-1) c x_1...x_s
    if (r % 2 == 0 && !cols.empty())
        for (auto& p : cols[0].body) p = -p;

    SaitoCertificate cert;
    if (rho >= 1) {
        std::size_t chosen = rho;
        for (std::size_t j = 0; j < rho; ++j) {
            Integer c(0);
            for (std::size_t i = 0; i < s; ++i) c += td.euler_rows().at(j, i);
            if (c != 0) {
                chosen = j;
                break;
            }
        }
        if (chosen == rho) throw euler_coefficient_degenerate();
        cert = saito_verify(td, f, cols, {chosen});
    } else {
        SyzygyVector scaling;
        scaling.body.assign(r, Polynomial(r));
        scaling.body[0] = Polynomial::variable(r, 0);
        scaling.kind = SyzygyKind::Extended;
        scaling.degree = cm.zero();
        cols.push_back(std::move(scaling));
        cert = saito_verify(td, f, cols, {});
    }
    cert.notes.push_back("chain and unit columns span the rank r-1 kernel; the exponent list "
                         "carries s-1 trivial classes, one fewer than a rank-r splitting");
    return cert;
}

SaitoCertificate product_block_certificate(const ToricData& td,
                                           const std::vector<Polynomial>& factors,
                                           const std::vector<std::vector<std::size_t>>& blocks) {
    std::size_t r = td.ray_count();
    std::size_t rho = td.picard_rank();
    if (factors.size() != blocks.size() || blocks.size() != rho)
        throw Error("InvalidArgument", "need one two-variable block per scaling functional");
    std::vector<bool> used(r, false);
    for (const auto& blk : blocks) {
        if (blk.size() != 2) throw Error("InvalidArgument", "each block must pair two variables");
        for (std::size_t i : blk) {
            if (i >= r || used[i]) throw Error("InvalidArgument", "blocks must partition the rays");
            used[i] = true;
        }
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw Error("InvalidArgument", "blocks must partition the rays");
    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (factors[t].is_zero()) throw zero_polynomial("product factor");
        for (const auto& [e, c] : factors[t].terms())
            for (std::size_t i = 0; i < r; ++i)
                if (e[i] != 0 && i != blocks[t][0] && i != blocks[t][1])
                    throw Error("InvalidArgument",
                                "factor " + std::to_string(t + 1) + " leaves its block");
    }

    Polynomial f = Polynomial::constant(r, 1);
    for (const auto& p : factors) f = f * p;

    std::vector<SyzygyVector> cols;
    for (std::size_t t = 0; t < factors.size(); ++t) {
        std::size_t a = blocks[t][0], bb = blocks[t][1];
        SyzygyVector col;
        col.body.assign(r, Polynomial(r));
        col.body[a] = factors[t].derivative(bb);
        col.body[bb] = -factors[t].derivative(a);
        col.degree = td.class_map().zero();
        cols.push_back(std::move(col));
    }

    // pair each block with the functional supported on it, then orient the
    // first column so the determinant matches the interleaved block layout
    std::vector<std::size_t> pi;
    bool clean = true;
    std::vector<bool> taken(rho, false);
    for (std::size_t t = 0; t < blocks.size() && clean; ++t) {
        std::size_t match = rho;
        for (std::size_t j = 0; j < rho; ++j) {
            bool on_block = td.euler_rows().at(j, blocks[t][0]) != 0 ||
                            td.euler_rows().at(j, blocks[t][1]) != 0;
            if (!on_block) continue;
            if (match != rho) clean = false;
            match = j;
        }
        if (match == rho || taken[match]) clean = false;
        if (clean) {
            taken[match] = true;
            pi.push_back(t);
            pi.push_back(rho + match);
        }
    }
    if (clean) {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < pi.size(); ++i)
            for (std::size_t j = i + 1; j < pi.size(); ++j)
                if (pi[i] > pi[j]) ++inversions;
        if (inversions % 2 == 1)
            for (auto& p : cols[0].body) p = -p;
    }

    SaitoCertificate cert = saito_verify(td, f, cols);
    for (std::size_t t = 0; t < factors.size(); ++t) {
        ClassElement minus_factor = td.class_map().negate(td.homogeneous_degree(factors[t]));
        if (!(cert.columns[t].degree == minus_factor))
            cert.notes.push_back("factor " + std::to_string(t + 1) + ": column degree " +
                                 cert.columns[t].degree.to_string() +
                                 " differs from minus the factor class " +
                                 minus_factor.to_string());
    }
    return cert;
}

std::pair<ToricData, SaitoCertificate> cone_extension(const ToricData& td,
                                                      const SaitoCertificate& cert,
                                                      const Integer& new_weight) {
    if (!cert.free) throw Error("NotFree", "cone extension requires a Free certificate");
    std::size_t r = td.ray_count();
    bool weighted = td.picard_rank() == 1 && td.class_group().invariant_factors.empty() &&
                    r == td.dim() + 1;
    if (weighted)
        for (std::size_t i = 0; i < r; ++i) weighted = weighted && td.degree(i).free.at(0) > 0;
    if (!weighted)
        throw Error("InvalidArgument", "cone extension needs a weighted projective base");
    if (new_weight < 1) throw Error("InvalidArgument", "the new weight must be positive");
    if (cert.columns.size() + 1 != r)
        throw Error("InvalidArgument", "certificate does not have the expected column split");

    IntMatrix wrow(1, r + 1);
    for (std::size_t i = 0; i < r; ++i) wrow.at(0, i) = td.degree(i).free.at(0);
    wrow.at(0, r) = new_weight;
    auto kernel = kernel_basis(wrow);

    Fan fan;
    fan.dim = r;
    for (std::size_t i = 0; i <= r; ++i) {
        std::vector<Integer> ray(r);
        for (std::size_t j = 0; j < r; ++j) ray[j] = kernel.at(j).at(i);
        fan.rays.push_back(std::move(ray));
    }
    for (std::size_t drop = 0; drop <= r; ++drop) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i <= r; ++i)
            if (i != drop) cone.push_back(i);
        fan.max_cones.push_back(std::move(cone));
    }

    ToricData big = build_variety(std::move(fan), true, true);
    for (std::size_t i = 0; i <= r; ++i)
        if (big.degree(i).free.at(0) != wrow.at(0, i))
            throw std::logic_error("extended grading does not reproduce the weights");

    std::vector<SyzygyVector> cols;
    for (const auto& old : cert.columns) {
        SyzygyVector lifted;
        for (const auto& p : old.body) lifted.body.push_back(lift_variables(p, r + 1));
        lifted.body.push_back(Polynomial(r + 1));
        lifted.kind = old.kind;
        lifted.degree = big.class_map().zero();  // re-inferred during verification
        cols.push_back(std::move(lifted));
    }
    // -1 instead of +1 keeps the determinant of the extended matrix equal to
    // the lifted one; the column stays a syzygy of the lifted divisor
    SyzygyVector unit;
    unit.body.assign(r + 1, Polynomial(r + 1));
    unit.body[r] = Polynomial::constant(r + 1, -1);
    unit.degree = big.class_map().negate(big.degree(r));
    cols.push_back(std::move(unit));

    SaitoCertificate out = saito_verify(big, lift_variables(cert.divisor, r + 1), cols, {0});
    return {std::move(big), std::move(out)};
}

std::optional<SaitoCertificate> saito_search(const ToricData& td, const Polynomial& f,
                                             const SearchOptions& opts) {
    if (!td.complete()) throw incomplete_variety("saito_search");
    std::size_t r = td.ray_count();
    std::size_t rho = td.picard_rank();
    const CokernelMap& cm = td.class_map();
    ClassElement beta = td.homogeneous_degree(f);
    ClassElement target = cm.subtract(beta, td.anticanonical());

    // candidate degrees: a box in the free coordinates, all torsion residues
    std::vector<ClassElement> cands;
    const auto& moduli = td.class_group().invariant_factors;
    std::vector<Integer> free(rho, -Integer(opts.box));
    for (;;) {
        std::vector<Integer> tor(moduli.size(), 0);
        for (;;) {
            ClassElement c;
            c.free = free;
            c.torsion = tor;
            cands.push_back(c);
            std::size_t t = 0;
            for (; t < tor.size(); ++t) {
                if (++tor[t] < moduli[t]) break;
                tor[t] = 0;
            }
            if (t == tor.size()) break;
        }
        std::size_t t = 0;
        for (; t < free.size(); ++t) {
            if (++free[t] <= opts.box) break;
            free[t] = -Integer(opts.box);
        }
        if (t == free.size()) break;
    }
    auto grade = [](const ClassElement& c) {
        Integer g(0);
        for (const auto& x : c.free) g += abs(x);
        return g;
    };
    std::sort(cands.begin(), cands.end(), [&](const ClassElement& a, const ClassElement& b) {
        Integer ga = grade(a), gb = grade(b);
        if (ga != gb) return ga < gb;
        return a < b;
    });

    std::map<ClassElement, SyzygySpace> cache;
    auto basis_of = [&](const ClassElement& kappa) -> const SyzygySpace& {
        auto it = cache.find(kappa);
        if (it == cache.end()) it = cache.emplace(kappa, syzygy_basis(td, {f}, kappa)).first;
        return it->second;
    };

    std::size_t evaluations = 0;
    std::optional<SaitoCertificate> found;

    auto try_columns = [&](const std::vector<std::size_t>& chosen,
                           const std::vector<std::size_t>& euler) -> bool {
        // group equal candidates; pick strictly increasing basis indices per group
        std::vector<std::pair<std::size_t, std::size_t>> runs;  // candidate, multiplicity
        for (std::size_t i = 0; i < chosen.size();) {
            std::size_t j = i;
            while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
            runs.emplace_back(chosen[i], j - i);
            i = j;
        }
        for (const auto& [c, mult] : runs)
            if (basis_of(cands[c]).basis.size() < mult) return false;

        std::vector<std::vector<std::size_t>> picks;
        for (const auto& [c, mult] : runs) {
            std::vector<std::size_t> first(mult);
            for (std::size_t i = 0; i < mult; ++i) first[i] = i;
            picks.push_back(std::move(first));
        }
        // advance a size-k combination drawn from [0, dim); resets and reports
        // false once exhausted
        auto next_combination = [](std::vector<std::size_t>& pick, std::size_t dim) {
            std::size_t k = pick.size();
            for (std::size_t i = k; i > 0;) {
                --i;
                if (pick[i] + (k - i) < dim) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                    return true;
                }
            }
            for (std::size_t j = 0; j < k; ++j) pick[j] = j;
            return false;
        };

        for (;;) {
            std::vector<SyzygyVector> cols;
            for (std::size_t g = 0; g < runs.size(); ++g) {
                const auto& basis = basis_of(cands[runs[g].first]).basis;
                for (std::size_t idx : picks[g]) cols.push_back(basis[idx]);
            }
            if (++evaluations > opts.combination_limit)
                throw search_limit_exceeded(opts.combination_limit);
            Polynomial det = poly_determinant(assemble_rows(td, cols, euler));
            if (!det.is_zero()) {
                try {
                    Polynomial q = exact_divide(det, f);
                    if (q.is_constant()) {
                        found = saito_verify(td, f, cols, euler);
                        return true;
                    }
                } catch (const Error&) {
                }
            }
            std::size_t g = runs.size();
            bool advanced = false;
            while (g > 0 && !advanced) {
                --g;
                advanced =
                    next_combination(picks[g], basis_of(cands[runs[g].first]).basis.size());
            }
            if (!advanced) return false;
        }
    };

    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, std::size_t, const ClassElement&,
                       const std::vector<std::size_t>&)>
        dfs = [&](std::size_t slots, std::size_t from, const ClassElement& partial,
                  const std::vector<std::size_t>& euler) -> bool {
        if (slots == 0) {
            if (!(partial == target)) return false;
            return try_columns(chosen, euler);
        }
        for (std::size_t c = from; c < cands.size(); ++c) {
            ClassElement next = cm.add(partial, cands[c]);
            bool feasible = true;
            for (std::size_t k = 0; k < rho && feasible; ++k) {
                Integer need = target.free[k] - next.free[k];
                Integer room = Integer(opts.box) * Integer(slots - 1);
                feasible = need >= -room && need <= room;
            }
            if (!feasible) continue;
            chosen.push_back(c);
            if (dfs(slots - 1, c, next, euler)) return true;
            chosen.pop_back();
        }
        return false;
    };

    std::vector<std::size_t> all(rho);
    for (std::size_t j = 0; j < rho; ++j) all[j] = j;
    if (dfs(r - rho, 0, cm.zero(), all)) return found;
    if (rho >= 2) {
        for (std::size_t j = 0; j < rho; ++j)
            if (dfs(r - 1, 0, cm.zero(), {j})) return found;
    }
    return std::nullopt;
}

}  // namespace toriclog
