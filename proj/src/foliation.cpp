#include "toriclog/foliation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toriclog {

namespace {

// advance a size-k combination drawn from [0, dim); false once exhausted
bool next_combination(std::vector<std::size_t>& pick, std::size_t dim) {
    std::size_t k = pick.size();
    for (std::size_t i = k; i > 0;) {
        --i;
        if (pick[i] + (k - i) < dim) {
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

IntMatrix select_rows(const IntMatrix& m, const std::vector<std::size_t>& rows) {
    IntMatrix out(rows.size(), m.cols());
    for (std::size_t t = 0; t < rows.size(); ++t)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(t, j) = m.at(rows[t], j);
    return out;
}

}  // namespace

DegreeProfile degree_rank(const ToricData& td, const std::vector<ClassElement>& degrees) {
    std::size_t k = degrees.size();
    std::size_t rho = td.picard_rank();
    DegreeProfile out;
    out.degrees = degrees;
    out.free_parts = IntMatrix(k, rho);
    for (std::size_t i = 0; i < k; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < rho; ++j) {
            out.free_parts.at(i, j) = degrees[i].free[j];
            if (degrees[i].free[j] != 0) zero = false;
        }
        if (zero && td.projective()) throw ZeroFreePartError(i + 1);
    }
    if (rho == 0 || out.free_parts.is_zero()) {
        out.rank = 0;
        out.span_basis = IntMatrix(0, rho);
        out.coordinates = IntMatrix(k, 0);
        return out;
    }

    SmithDecomposition snf = smith_normal_form(out.free_parts);
    out.rank = snf.rank;
    IntMatrix uinv = inverse_unimodular(snf.u);
    IntMatrix sv = snf.s * inverse_unimodular(snf.v);
    out.span_basis = IntMatrix(snf.rank, rho);
    for (std::size_t t = 0; t < snf.rank; ++t)
        for (std::size_t j = 0; j < rho; ++j) out.span_basis.at(t, j) = sv.at(t, j);
    out.coordinates = IntMatrix(k, snf.rank);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < snf.rank; ++t) out.coordinates.at(i, t) = uinv.at(i, t);
    if (!(out.coordinates * out.span_basis == out.free_parts))
        throw std::logic_error("degree span reconstruction failed");
    return out;
}

DegreeProfile degree_rank(const ToricData& td, const std::vector<Polynomial>& f) {
    std::vector<ClassElement> degrees;
    degrees.reserve(f.size());
    for (const Polynomial& p : f) {
        if (p.is_zero()) throw zero_polynomial("tuple entry");
        degrees.push_back(td.homogeneous_degree(p));
    }
    return degree_rank(td, degrees);
}

SubsetRankCheck cayley_bacharach(const DegreeProfile& profile) {
    if (profile.rank == 0) throw degenerate_profile();
    SubsetRankCheck out;
    if (profile.rank == 1) return out;
    std::size_t k = profile.degrees.size();
    // the (k-1)-subsets each omit one index; omitting the last comes first in
    // lexicographic order of the kept indices
    for (std::size_t skip = k; skip > 0;) {
        --skip;
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < k; ++i)
            if (i != skip) kept.push_back(i);
        if (rank(select_rows(profile.coordinates, kept)) < profile.rank) {
            out.holds = false;
            out.failing = std::move(kept);
            return out;
        }
    }
    return out;
}

CoprimeCheck pairwise_coprime(const std::vector<Polynomial>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].is_zero()) throw zero_polynomial("tuple entry");
    CoprimeCheck out;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            Polynomial g = poly_gcd(f[i], f[j]);
            if (g.is_constant()) continue;
            out.coprime = false;
            out.first = i;
            out.second = j;
            out.common_factor = std::move(g);
            return out;
        }
    }
    return out;
}

bool algebraically_independent(const ToricData& td, const std::vector<Polynomial>& f) {
    return symbolic_rank(jacobian(td, f)) == f.size();
}

FoliationReport foliation_check(const ToricData& td, const std::vector<Polynomial>& f) {
    if (!td.projective()) throw not_projective("distribution check");
    if (f.size() < 2) throw tuple_too_small(f.size());

    FoliationReport r;
    r.profile = degree_rank(td, f);
    r.q = r.profile.rank;
    r.k = f.size();
    r.n = td.dim();
    std::size_t rho = td.picard_rank();

    long lk = static_cast<long>(r.k), ln = static_cast<long>(r.n), lq = static_cast<long>(r.q);
    r.rank_window = (lk - ln < lq) && (lq < lk);
    r.dimension_bound = lk < ln;
    r.codimension = r.k - r.q;
    r.image_rank = r.q;
    r.kernel_rank = rho - r.q;

    if (!r.rank_window) {
        r.reasons.push_back("rank_window");
        if (r.q == r.k)
            r.notes.push_back("q = k = " + std::to_string(r.q) +
                              ": the codimension window is empty");
        else
            r.notes.push_back("codimension " + std::to_string(r.codimension) +
                              " is not below the dimension " + std::to_string(r.n));
    }
    if (!r.dimension_bound)
        r.notes.push_back("k = " + std::to_string(r.k) + " is not below the dimension " +
                          std::to_string(r.n) +
                          "; the verdict rests on the codimension window alone");

    r.coprime_detail = pairwise_coprime(f);
    r.coprime = r.coprime_detail.coprime;
    if (!r.coprime) {
        r.reasons.push_back("coprime");
        r.notes.push_back("entries " + std::to_string(r.coprime_detail.first + 1) + " and " +
                          std::to_string(r.coprime_detail.second + 1) +
                          " share a nonconstant factor");
    }

    // the jacobian rank is the one expensive verdict; skip it once an earlier
    // check has already settled the outcome
    if (r.rank_window && r.coprime) {
        r.independent = algebraically_independent(td, f);
        if (!*r.independent) r.reasons.push_back("independent");
    }

    SubsetRankCheck cb = cayley_bacharach(r.profile);
    r.cayley_bacharach = cb.holds;
    r.cayley_failure = cb.failing;
    if (!cb.holds) {
        r.reasons.push_back("cayley_bacharach");
        std::string which;
        for (std::size_t i : cb.failing) {
            if (!which.empty()) which += ", ";
            which += std::to_string(i + 1) + ": " + r.profile.degrees[i].to_string();
        }
        r.notes.push_back("degree points at entries {" + which + "} span rank below q = " +
                          std::to_string(r.q));
    }

    if (r.q == rho)
        r.notes.push_back(
            "q equals the free class rank; the degree-zero tangent sections coincide with "
            "the distribution's sections");

    r.applies = r.rank_window && r.coprime && r.independent.value_or(false) &&
                r.cayley_bacharach;

    if (r.applies) {
        // gcd over the maximal minors of diag(f) * coordinates; each minor is
        // det of a q x q integer block times the matching product of entries
        Polynomial acc(f.front().nvars());
        std::vector<std::size_t> pick(r.q);
        for (std::size_t i = 0; i < r.q; ++i) pick[i] = i;
        do {
            Integer d = determinant(select_rows(r.profile.coordinates, pick));
            if (d == 0) continue;
            Polynomial minor = Polynomial::constant(f.front().nvars(), Rational(d));
            for (std::size_t i : pick) minor = minor * f[i];
            acc = acc.is_zero() ? minor : poly_gcd(acc, minor);
            if (acc.is_constant()) break;
        } while (next_combination(pick, r.k));
        r.minor_gcd_trivial = !acc.is_zero() && acc.is_constant();
        if (*r.minor_gcd_trivial)
            r.notes.push_back("maximal minors of the scaled degree matrix share no factor");
    }

    return r;
}

SyzygySpace tangent_sections(const ToricData& td, const std::vector<Polynomial>& f,
                             const ClassElement& kappa) {
    return syzygy_basis(td, f, kappa);
}

}  // namespace toriclog
