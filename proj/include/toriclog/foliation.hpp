/*
 * Hypothesis checks for a polynomial tuple cutting out a distribution: degree
 * rank, the subset-rank (Cayley-Bacharach) condition on the degree points,
 * pairwise coprimality, algebraic independence, and the maximal-minor
 * torsion-freeness witness. The report aggregates the verdicts.
 */
#pragma once

#include "toriclog/syzygy.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toriclog {

struct DegreeProfile {
    std::vector<ClassElement> degrees;  // one per tuple entry
    IntMatrix free_parts;               // k x rho, row i = free coordinates of degrees[i]
    std::size_t rank = 0;               // q
    IntMatrix span_basis;               // rank x rho, lattice basis of the row span
    IntMatrix coordinates;              // k x rank; coordinates * span_basis == free_parts
};

// Projective inputs reject entries whose degree has zero free part.
DegreeProfile degree_rank(const ToricData& td, const std::vector<ClassElement>& degrees);
DegreeProfile degree_rank(const ToricData& td, const std::vector<Polynomial>& f);

struct SubsetRankCheck {
    bool holds = true;
    std::vector<std::size_t> failing;  // lex-first (k-1)-subset of rank < q, else empty
};

// every (k-1)-subset of the degree points spans rank q; immediate when q = 1
SubsetRankCheck cayley_bacharach(const DegreeProfile& profile);

struct CoprimeCheck {
    bool coprime = true;
    std::size_t first = 0, second = 0;  // witness pair when not coprime
    Polynomial common_factor;
};

CoprimeCheck pairwise_coprime(const std::vector<Polynomial>& f);

// symbolic rank of the jacobian equals the tuple length
bool algebraically_independent(const ToricData& td, const std::vector<Polynomial>& f);

struct FoliationReport {
    DegreeProfile profile;
    std::size_t q = 0, k = 0, n = 0;  // n = dimension of the variety
    bool rank_window = false;         // k - n < q < k
    bool dimension_bound = false;     // k < n; reported separately, does not gate
    bool coprime = false;
    CoprimeCheck coprime_detail;
    std::optional<bool> independent;  // empty when skipped after an earlier failure
    bool cayley_bacharach = false;
    std::vector<std::size_t> cayley_failure;  // offending subset when the check fails
    std::size_t codimension = 0;              // k - q
    std::size_t image_rank = 0;               // q
    std::size_t kernel_rank = 0;              // rho - q
    std::optional<bool> minor_gcd_trivial;    // computed only when all verdicts hold
    bool applies = false;
    std::vector<std::string> reasons;  // failed verdict names
    std::vector<std::string> notes;
};

FoliationReport foliation_check(const ToricData& td, const std::vector<Polynomial>& f);

// graded sections of the common syzygy sheaf of the tuple
SyzygySpace tangent_sections(const ToricData& td, const std::vector<Polynomial>& f,
                             const ClassElement& kappa);

}  // namespace toriclog
