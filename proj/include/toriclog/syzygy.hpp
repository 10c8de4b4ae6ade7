#pragma once

#include <vector>

#include "toriclog/variety.hpp"

namespace toriclog {

using PolyVector = std::vector<Polynomial>;

enum class SyzygyKind { Plain, Extended };

// A tuple mu with mu_i homogeneous of class kappa + deg(x_i).  Plain vectors
// satisfy sum_i mu_i d(f_j)/d(x_i) = 0 for every member of the tuple f;
// extended ones satisfy the relation modulo the ideal (f) of a single divisor.
struct SyzygyVector {
    PolyVector body;
    ClassElement degree;
    SyzygyKind kind = SyzygyKind::Plain;
};

struct SyzygySpace {
    ClassElement degree;
    SyzygyKind kind = SyzygyKind::Plain;
    std::vector<Polynomial> target;
    std::vector<SyzygyVector> basis;
};

PolyVector gradient(const ToricData& td, const Polynomial& f);
std::vector<PolyVector> jacobian(const ToricData& td, const std::vector<Polynomial>& f);

// sum_i phi_j(deg x_i) x_i d(f)/d(x_i) == phi_j(deg f) * f
bool euler_relation_check(const ToricData& td, const Polynomial& f, std::size_t j);

// basis of the graded piece of syzygies of the gradient tuple; every input
// polynomial must be homogeneous and nonzero
SyzygySpace syzygy_basis(const ToricData& td, const std::vector<Polynomial>& f,
                         const ClassElement& kappa);

// same relation up to a multiple of f itself; the multiplier is solved for and
// discarded, only the vector part is returned
SyzygySpace extended_syzygy_basis(const ToricData& td, const Polynomial& f,
                                  const ClassElement& kappa);

// checks the defining relation of v.kind against f (extended requires a single
// divisor)
bool is_syzygy(const ToricData& td, const std::vector<Polynomial>& f, const SyzygyVector& v);

// every nonzero entry homogeneous of class v.degree + deg(x_i)
bool syzygy_degrees_consistent(const ToricData& td, const SyzygyVector& v);

// rank over the fraction field of the coordinate ring
std::size_t symbolic_rank(const std::vector<PolyVector>& rows);

}  // namespace toriclog
