/*
 * Shared fan constructions for the test suites. Ray order fixes the Cox
 * variable order, so tests that freeze degree coordinates depend on it.
 */
#pragma once

#include "toriclog/variety.hpp"

#include <cstddef>
#include <vector>

namespace fixtures {

using toriclog::Fan;
using toriclog::Integer;

inline Fan p2() {
    Fan f;
    f.dim = 2;
    f.rays = {{Integer(1), Integer(0)}, {Integer(0), Integer(1)}, {Integer(-1), Integer(-1)}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    return f;
}

inline Fan p1p1() {
    Fan f;
    f.dim = 2;
    f.rays = {{Integer(1), Integer(0)}, {Integer(-1), Integer(0)},
              {Integer(0), Integer(1)}, {Integer(0), Integer(-1)}};
    f.max_cones = {{0, 2}, {2, 1}, {1, 3}, {3, 0}};
    return f;
}

// weighted projective plane with weight multiset {1,1,2}; variable order has
// the weight-2 ray in the middle (degrees 1,2,1)
inline Fan weighted112() {
    Fan f;
    f.dim = 2;
    f.rays = {{Integer(1), Integer(0)}, {Integer(0), Integer(1)}, {Integer(-1), Integer(-2)}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    return f;
}

// affine quotient C^2 / Z_2, class group Z/2, Picard rank 0
inline Fan quotient_z2() {
    Fan f;
    f.dim = 2;
    f.rays = {{Integer(1), Integer(1)}, {Integer(1), Integer(-1)}};
    f.max_cones = {{0, 1}};
    return f;
}

// Hirzebruch surface F_a; a = 1 is the blowup of the plane
inline Fan hirzebruch(long a) {
    Fan f;
    f.dim = 2;
    f.rays = {{Integer(1), Integer(0)}, {Integer(0), Integer(1)},
              {Integer(-1), Integer(a)}, {Integer(0), Integer(-1)}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return f;
}

// weighted projective space with weight multiset {1,1,2,2}; ray rows span the
// saturated kernel of (1 1 2 2), so the grading is by total weight
inline Fan weighted1122() {
    Fan f;
    f.dim = 3;
    f.rays = {{Integer(1), Integer(0), Integer(0)},
              {Integer(-1), Integer(2), Integer(0)},
              {Integer(0), Integer(-1), Integer(1)},
              {Integer(0), Integer(0), Integer(-1)}};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return f;
}

// weighted projective line-ish plane with pairwise distinct weights 1,2,3
inline Fan weighted123() {
    Fan f;
    f.dim = 2;
    f.rays = {{Integer(1), Integer(1)}, {Integer(1), Integer(-2)}, {Integer(-1), Integer(1)}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    return f;
}

// C^2/Z_2 times P^1 x P^1; the first two rays carry purely torsion classes
inline Fan quotient_times_p1p1() {
    Fan f;
    f.dim = 4;
    auto pad = [&](std::vector<Integer> head, std::vector<Integer> tail) {
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };
    f.rays = {pad({1, 1}, {0, 0}),  pad({1, -1}, {0, 0}), pad({0, 0}, {1, 0}),
              pad({0, 0}, {-1, 0}), pad({0, 0}, {0, 1}),  pad({0, 0}, {0, -1})};
    for (const auto& c : p1p1().max_cones) f.max_cones.push_back({0, 1, c[0] + 2, c[1] + 2});
    return f;
}

// product of projective spaces; rays grouped per factor as
// e_1..e_d, -(e_1+..+e_d), cones = one dropped ray per factor
inline Fan product_projective(const std::vector<std::size_t>& dims) {
    Fan f;
    for (std::size_t d : dims) f.dim += d;
    std::size_t off = 0;      // coordinate offset of the current factor
    std::size_t ray_off = 0;  // ray index offset of the current factor
    std::vector<std::vector<std::vector<std::size_t>>> choices;
    for (std::size_t d : dims) {
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Integer> e(f.dim, Integer(0));
            e[off + i] = 1;
            f.rays.push_back(std::move(e));
        }
        std::vector<Integer> last(f.dim, Integer(0));
        for (std::size_t i = 0; i < d; ++i) last[off + i] = -1;
        f.rays.push_back(std::move(last));

        std::vector<std::vector<std::size_t>> per_factor;
        for (std::size_t drop = 0; drop <= d; ++drop) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i <= d; ++i)
                if (i != drop) keep.push_back(ray_off + i);
            per_factor.push_back(std::move(keep));
        }
        choices.push_back(std::move(per_factor));
        off += d;
        ray_off += d + 1;
    }
    std::vector<std::size_t> cone;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        cone.clear();
        for (std::size_t t = 0; t < choices.size(); ++t)
            cone.insert(cone.end(), choices[t][pick[t]].begin(), choices[t][pick[t]].end());
        f.max_cones.push_back(cone);
        std::size_t t = 0;
        for (; t < pick.size(); ++t) {
            if (++pick[t] <= dims[t]) break;
            pick[t] = 0;
        }
        if (t == pick.size()) break;
    }
    return f;
}

}  // namespace fixtures
