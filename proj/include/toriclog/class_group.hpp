/*
 * Finitely generated abelian groups presented as cokernels Z^m / im(A),
 * with reproducible coordinates: free coordinates come from a Hermite-reduced
 * basis of the functionals vanishing on im(A), torsion coordinates are
 * residues modulo the invariant factors.
 */
#pragma once

#include "toriclog/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toriclog {

struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;  // each >= 2, d1 | d2 | ...

    bool operator==(const AbelianGroup&) const = default;
    std::string to_string() const;  // e.g. "Z^2 + Z/2"
};

// An element written in the cokernel coordinates fixed by CokernelMap.
struct ClassElement {
    std::vector<Integer> free;     // length = free_rank
    std::vector<Integer> torsion;  // length = #invariant_factors, entry i in [0, d_i)

    bool operator==(const ClassElement&) const = default;
    bool operator<(const ClassElement&) const;  // lexicographic, for ordered containers
    bool is_zero() const;
    std::string to_string() const;
};

// Presentation of Z^m / column-span(A) together with the projection map.
class CokernelMap {
public:
    CokernelMap() = default;
    CokernelMap(AbelianGroup group, IntMatrix free_rows, IntMatrix torsion_rows,
                std::vector<Integer> moduli);

    const AbelianGroup& group() const { return group_; }
    // rho x m functional matrix; row j is the j-th free coordinate (the j-th
    // dual basis vector of the free part, torsion killed)
    const IntMatrix& free_rows() const { return free_rows_; }
    const IntMatrix& torsion_rows() const { return torsion_rows_; }
    const std::vector<Integer>& moduli() const { return moduli_; }
    std::size_t source_rank() const { return free_rows_.cols(); }

    ClassElement apply(const std::vector<Integer>& v) const;
    ClassElement zero() const;
    ClassElement add(const ClassElement& a, const ClassElement& b) const;
    ClassElement subtract(const ClassElement& a, const ClassElement& b) const;
    ClassElement negate(const ClassElement& a) const;
    ClassElement scale(const Integer& c, const ClassElement& a) const;

private:
    AbelianGroup group_;
    IntMatrix free_rows_;     // rho x m
    IntMatrix torsion_rows_;  // tau x m
    std::vector<Integer> moduli_;  // tau entries, aligned with torsion_rows_
};

// Z^rows(A) / column-span(A). Projection composed with A is zero.
CokernelMap cokernel(const IntMatrix& a);

}  // namespace toriclog
