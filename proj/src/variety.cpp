#include "toriclog/variety.hpp"

#include "toriclog/lattice_points.hpp"

#include <algorithm>
#include <cassert>

namespace toriclog {

namespace {

IntMatrix rays_as_rows(const Fan& fan) {
    IntMatrix m(fan.rays.size(), fan.dim);
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        for (std::size_t j = 0; j < fan.dim; ++j) m.at(i, j) = fan.rays[i][j];
    return m;
}

std::vector<std::string> generic_names(std::size_t r) {
    std::vector<std::string> out;
    out.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

void validate(const Fan& fan) {
    if (fan.dim == 0) throw Error("InvalidFan", "ambient dimension is zero");
    const std::size_t r = fan.rays.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (fan.rays[i].size() != fan.dim)
            throw Error("InvalidFan", "ray " + std::to_string(i) + " has wrong dimension");
        Integer g = 0;
        for (const auto& x : fan.rays[i]) g = int_gcd(g, x);
        if (g != 1) throw non_primitive_ray(i);
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (fan.rays[i] == fan.rays[j]) throw duplicate_ray(i, j);
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        IntMatrix sub(cone.size(), fan.dim);
        for (std::size_t i = 0; i < cone.size(); ++i) {
            if (cone[i] >= r)
                throw Error("InvalidFan", "cone " + std::to_string(c) + " indexes a missing ray");
            for (std::size_t j = 0; j < fan.dim; ++j) sub.at(i, j) = fan.rays[cone[i]][j];
        }
        if (rank(sub) != cone.size()) throw non_simplicial_cone(c);
    }
    if (rank(rays_as_rows(fan)) != fan.dim) throw torus_factor();
}

}  // namespace

ToricData build_variety(Fan fan, bool complete, bool projective) {
    validate(fan);
    ToricData td;
    td.fan_ = std::move(fan);
    td.complete_ = complete;
    td.projective_ = projective;
    td.class_map_ = cokernel(rays_as_rows(td.fan_));

    const std::size_t r = td.ray_count();
    const std::size_t rho = td.class_map_.group().free_rank;
    assert(rho == r - td.dim());

    std::vector<Integer> e(r, Integer(0));
    for (std::size_t i = 0; i < r; ++i) {
        e[i] = 1;
        td.degrees_.push_back(td.class_map_.apply(e));
        e[i] = 0;
    }

    td.euler_rows_ = IntMatrix(rho, r);
    for (std::size_t j = 0; j < rho; ++j)
        for (std::size_t i = 0; i < r; ++i) td.euler_rows_.at(j, i) = td.degrees_[i].free[j];

    td.anticanonical_ = td.class_map_.zero();
    for (const auto& d : td.degrees_)
        td.anticanonical_ = td.class_map_.add(td.anticanonical_, d);
    return td;
}

ClassElement ToricData::divisor_class(const std::vector<Integer>& a) const {
    return class_map_.apply(a);
}

ClassElement ToricData::homogeneous_degree(const Polynomial& p) const {
    if (p.is_zero()) throw zero_polynomial("homogeneous_degree");
    assert(p.nvars() == ray_count());
    const Exponent* first = nullptr;
    ClassElement cls;
    for (const auto& [e, c] : p.terms()) {
        std::vector<Integer> a(e.begin(), e.end());
        ClassElement d = class_map_.apply(a);
        if (!first) {
            first = &e;
            cls = std::move(d);
        } else if (!(d == cls)) {
            auto names = generic_names(ray_count());
            throw NotHomogeneousError(monomial_string(*first, names), monomial_string(e, names));
        }
    }
    return cls;
}

std::vector<Exponent> ToricData::monomial_basis(const ClassElement& alpha) const {
    if (!complete_) throw incomplete_variety("monomial_basis");
    assert(alpha.free.size() == class_map_.group().free_rank);
    assert(alpha.torsion.size() == class_map_.moduli().size());
    {
        std::lock_guard<std::mutex> g(cache_->lock);
        auto it = cache_->map.find(alpha);
        if (it != cache_->map.end()) return it->second;
    }

    const IntMatrix& free = class_map_.free_rows();
    const IntMatrix& tors = class_map_.torsion_rows();
    const auto& moduli = class_map_.moduli();
    const std::size_t r = ray_count();
    const std::size_t rho = free.rows();
    const std::size_t tau = moduli.size();

    // solve deg(a) = alpha over Z: free rows exactly, torsion rows modulo the
    // invariant factors via one slack unknown per factor
    IntMatrix sys(rho + tau, r + tau);
    std::vector<Integer> rhs(rho + tau);
    for (std::size_t j = 0; j < rho; ++j) {
        for (std::size_t i = 0; i < r; ++i) sys.at(j, i) = free.at(j, i);
        rhs[j] = alpha.free[j];
    }
    for (std::size_t s = 0; s < tau; ++s) {
        for (std::size_t i = 0; i < r; ++i) sys.at(rho + s, i) = tors.at(s, i);
        sys.at(rho + s, r + s) = moduli[s];
        rhs[rho + s] = alpha.torsion[s];
    }

    std::vector<Exponent> basis;
    if (auto part = integer_solve(sys, rhs)) {
        auto kern = kernel_basis(sys);
        // slack coordinates are determined by the exponent part, so dropping
        // them keeps the kernel vectors a lattice basis
        IntMatrix lattice(r, kern.size());
        for (std::size_t j = 0; j < kern.size(); ++j)
            for (std::size_t i = 0; i < r; ++i) lattice.at(i, j) = kern[j][i];
        std::vector<Integer> a0(part->begin(), part->begin() + static_cast<std::ptrdiff_t>(r));
        auto pts = nonnegative_points(lattice, a0);
        if (!pts) throw unbounded_graded_piece(alpha.to_string());
        for (const auto& p : *pts) {
            Exponent e(r);
            for (std::size_t i = 0; i < r; ++i) {
                assert(p[i].fits_sint_p());
                e[i] = static_cast<std::int32_t>(p[i].get_si());
            }
            basis.push_back(std::move(e));
        }
        std::sort(basis.begin(), basis.end());
    }

    std::lock_guard<std::mutex> g(cache_->lock);
    auto [it, inserted] = cache_->map.emplace(alpha, std::move(basis));
    return it->second;
}

bool ToricData::is_effective(const ClassElement& alpha) const {
    return !monomial_basis(alpha).empty();
}

std::optional<Exponent> ToricData::effective_witness(const ClassElement& alpha) const {
    const auto& basis = monomial_basis(alpha);
    if (basis.empty()) return std::nullopt;
    return basis.front();
}

bool ToricData::h0_vanishes(const ClassElement& alpha) const {
    return monomial_basis(alpha).empty();
}

}  // namespace toriclog
