#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toriclog/syzygy.hpp"

namespace toriclog {

// Square coefficient matrix: one column per syzygy, then one scaling column
// (phi_j(deg x_i) * x_i)_i per chosen Euler functional.
struct SaitoMatrix {
    std::vector<PolyVector> rows;
    std::size_t syzygy_count = 0;
};

enum class Effectivity { Effective, NotEffective, Skipped };

struct SaitoCertificate {
    Polynomial divisor;
    ClassElement divisor_class;
    std::vector<SyzygyVector> columns;       // syzygy columns, matrix order
    std::vector<std::size_t> euler_columns;  // functional indices appended after them
    Polynomial determinant;
    std::optional<Rational> factor;  // determinant == factor * divisor when set
    bool free = false;
    std::vector<ClassElement> exponents;  // zeros for scaling columns, then column degrees
    // class of (sum of ray degrees) + (sum of column degrees) - deg(divisor)
    Effectivity surplus = Effectivity::Skipped;
    ClassElement surplus_class;
    std::vector<bool> summand_vanishing;  // h0(-kappa_j) == 0 per syzygy column
    // set when free and every summand_vanishing entry holds; the sheaf is then
    // the direct sum of the twists named by the exponents
    std::optional<std::string> splitting;
    std::vector<std::string> notes;
};

// exactly r - rho syzygies; scaling columns for all functionals appended
SaitoMatrix coefficient_matrix(const ToricData& td, const std::vector<SyzygyVector>& nu);

Polynomial poly_determinant(const std::vector<PolyVector>& rows);
Polynomial determinant(const SaitoMatrix& m);

// Verifies every column against f (by its kind), assembles the matrix, and
// decides whether the determinant is a nonzero rational multiple of f. Side
// conditions that need monomial bases are Skipped when unavailable; the
// verdict is computed regardless.
SaitoCertificate saito_verify(const ToricData& td, const Polynomial& f,
                              const std::vector<SyzygyVector>& nu);
// general column split: nu.size() + euler.size() == r, euler indices distinct
SaitoCertificate saito_verify(const ToricData& td, const Polynomial& f,
                              const std::vector<SyzygyVector>& nu,
                              const std::vector<std::size_t>& euler);

struct SearchOptions {
    long box = 3;  // free coordinates of candidate degrees range over [-box, box]
    std::size_t combination_limit = 10000;  // determinant evaluations allowed
};

// Enumerates candidate degree multisets with the forced total, solves syzygy
// bases per degree, and tries column selections until a certificate verifies.
// Runs the square form first, then (rho >= 2) the variant with r - 1 syzygy
// columns and a single scaling column.
std::optional<SaitoCertificate> saito_search(const ToricData& td, const Polynomial& f,
                                             const SearchOptions& opts = {});

// Product of (x_i - x_j) over all pairs of rays with equal divisor class,
// certified through per-group Vandermonde columns.
std::pair<Polynomial, SaitoCertificate> braid_certificate(const ToricData& td);

// f = x_1 ... x_s, certified through chain and unit columns plus one scaling
// column whose coefficient is nonzero on the chosen functional.
SaitoCertificate invariant_divisor_certificate(const ToricData& td, std::size_t s);

// f = product of factors supported on disjoint two-variable blocks; each block
// contributes the column (d(f_t)/d(x_b), -d(f_t)/d(x_a)).
SaitoCertificate product_block_certificate(const ToricData& td,
                                           const std::vector<Polynomial>& factors,
                                           const std::vector<std::vector<std::size_t>>& blocks);

// Extends a weighted projective certificate by one variable of the given
// weight: the divisor and all columns lift unchanged and a unit column is
// appended, so the determinant is preserved.
std::pair<ToricData, SaitoCertificate> cone_extension(const ToricData& td,
                                                      const SaitoCertificate& cert,
                                                      const Integer& new_weight);

}  // namespace toriclog
