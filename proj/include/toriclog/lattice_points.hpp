/*
 * Integer points of a translated lattice meeting the nonnegative orthant:
 * all x = particular + basis * t (t integral) with every coordinate >= 0.
 *
 * The polyhedron {t : particular + basis t >= 0} is projected coordinate by
 * coordinate with exact Fourier Motzkin elimination; enumeration is a depth
 * first walk through the projected interval bounds, so no point is missed and
 * none is tried outside the polytope. If the polyhedron has a nonzero
 * recession direction the set is infinite and nullopt is returned.
 */
#pragma once

#include "toriclog/int_matrix.hpp"

#include <optional>
#include <vector>

namespace toriclog {

// basis columns are the lattice generators; particular has length basis.rows().
// Points come back in depth-first order of the t coordinates, not sorted.
std::optional<std::vector<std::vector<Integer>>> nonnegative_points(
    const IntMatrix& basis, const std::vector<Integer>& particular);

}  // namespace toriclog
