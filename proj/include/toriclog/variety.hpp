/*
 * Simplicial fans and the derived grading data: class group, degree of each
 * ray divisor, Euler functional rows, anticanonical class, and exact monomial
 * bases of graded pieces of the Cox ring.
 */
#pragma once

#include "toriclog/class_group.hpp"
#include "toriclog/polynomial.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace toriclog {

struct Fan {
    std::size_t dim = 0;
    std::vector<std::vector<Integer>> rays;            // primitive, pairwise distinct
    std::vector<std::vector<std::size_t>> max_cones;   // 0-based ray index sets
};

class ToricData {
public:
    const Fan& fan() const { return fan_; }
    std::size_t ray_count() const { return fan_.rays.size(); }
    std::size_t dim() const { return fan_.dim; }
    std::size_t picard_rank() const { return class_map_.group().free_rank; }
    bool complete() const { return complete_; }
    bool projective() const { return projective_; }

    const CokernelMap& class_map() const { return class_map_; }
    const AbelianGroup& class_group() const { return class_map_.group(); }
    const std::vector<ClassElement>& degrees() const { return degrees_; }
    const ClassElement& degree(std::size_t i) const { return degrees_[i]; }
    // rho x r; row j evaluates the j-th free coordinate functional on [D_i]
    const IntMatrix& euler_rows() const { return euler_rows_; }
    const ClassElement& anticanonical() const { return anticanonical_; }

    ClassElement divisor_class(const std::vector<Integer>& a) const;
    ClassElement homogeneous_degree(const Polynomial& p) const;

    // all exponent vectors a >= 0 with divisor_class(a) = alpha, sorted
    // lexicographically; requires the complete flag
    std::vector<Exponent> monomial_basis(const ClassElement& alpha) const;
    bool is_effective(const ClassElement& alpha) const;
    std::optional<Exponent> effective_witness(const ClassElement& alpha) const;
    bool h0_vanishes(const ClassElement& alpha) const;

private:
    friend ToricData build_variety(Fan fan, bool complete, bool projective);

    Fan fan_;
    bool complete_ = false;
    bool projective_ = false;
    CokernelMap class_map_;
    std::vector<ClassElement> degrees_;
    IntMatrix euler_rows_;
    ClassElement anticanonical_;

    // graded pieces are queried repeatedly with the same class during
    // searches; the cache sits behind a pointer to keep ToricData movable
    struct BasisCache {
        std::mutex lock;
        std::map<ClassElement, std::vector<Exponent>> map;
    };
    std::unique_ptr<BasisCache> cache_ = std::make_unique<BasisCache>();
};

// Validates the fan (primitive distinct rays, simplicial cones, spanning ray
// set) and derives the grading data. Flags are caller assertions, not checked.
ToricData build_variety(Fan fan, bool complete, bool projective);

}  // namespace toriclog
