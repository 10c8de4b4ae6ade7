#include "toriclog/class_group.hpp"

#include <cassert>

namespace toriclog {

std::string AbelianGroup::to_string() const {
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " x ";
        out += part;
    };
    if (free_rank == 1) append("Z");
    else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (const auto& d : invariant_factors) append("Z/" + d.get_str());
    return out.empty() ? "0" : out;
}

bool ClassElement::operator<(const ClassElement& rhs) const {
    if (free != rhs.free) return free < rhs.free;
    return torsion < rhs.torsion;
}

bool ClassElement::is_zero() const {
    for (const auto& x : free)
        if (x != 0) return false;
    for (const auto& x : torsion)
        if (x != 0) return false;
    return true;
}

std::string ClassElement::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < free.size(); ++i) {
        if (i) out += ",";
        out += free[i].get_str();
    }
    if (!torsion.empty()) {
        out += ";";
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (i) out += ",";
            out += torsion[i].get_str();
        }
    }
    return out + ")";
}

CokernelMap::CokernelMap(AbelianGroup group, IntMatrix free_rows, IntMatrix torsion_rows,
                         std::vector<Integer> moduli)
    : group_(std::move(group)),
      free_rows_(std::move(free_rows)),
      torsion_rows_(std::move(torsion_rows)),
      moduli_(std::move(moduli)) {
    assert(group_.free_rank == free_rows_.rows());
    assert(moduli_.size() == torsion_rows_.rows());
}

ClassElement CokernelMap::apply(const std::vector<Integer>& v) const {
    ClassElement out;
    out.free = free_rows_.apply(v);
    out.torsion = torsion_rows_.apply(v);
    for (std::size_t i = 0; i < out.torsion.size(); ++i)
        out.torsion[i] = mod_floor(out.torsion[i], moduli_[i]);
    return out;
}

ClassElement CokernelMap::zero() const {
    return ClassElement{std::vector<Integer>(group_.free_rank, Integer(0)),
                        std::vector<Integer>(moduli_.size(), Integer(0))};
}

ClassElement CokernelMap::add(const ClassElement& a, const ClassElement& b) const {
    ClassElement out = a;
    for (std::size_t i = 0; i < out.free.size(); ++i) out.free[i] += b.free[i];
    for (std::size_t i = 0; i < out.torsion.size(); ++i)
        out.torsion[i] = mod_floor(out.torsion[i] + b.torsion[i], moduli_[i]);
    return out;
}

ClassElement CokernelMap::subtract(const ClassElement& a, const ClassElement& b) const {
    return add(a, negate(b));
}

ClassElement CokernelMap::negate(const ClassElement& a) const {
    ClassElement out = a;
    for (auto& x : out.free) x = -x;
    for (std::size_t i = 0; i < out.torsion.size(); ++i)
        out.torsion[i] = mod_floor(-out.torsion[i], moduli_[i]);
    return out;
}

ClassElement CokernelMap::scale(const Integer& c, const ClassElement& a) const {
    ClassElement out = a;
    for (auto& x : out.free) x *= c;
    for (std::size_t i = 0; i < out.torsion.size(); ++i)
        out.torsion[i] = mod_floor(out.torsion[i] * c, moduli_[i]);
    return out;
}

CokernelMap cokernel(const IntMatrix& a) {
    SmithDecomposition d = smith_normal_form(a);
    const std::size_t m = a.rows();

    std::vector<Integer> moduli;
    std::vector<std::size_t> torsion_idx;
    for (std::size_t i = 0; i < d.rank; ++i) {
        if (d.s.at(i, i) >= 2) {
            moduli.push_back(d.s.at(i, i));
            torsion_idx.push_back(i);
        }
    }

    IntMatrix torsion_rows(torsion_idx.size(), m);
    for (std::size_t k = 0; k < torsion_idx.size(); ++k)
        for (std::size_t j = 0; j < m; ++j)
            torsion_rows.at(k, j) = mod_floor(d.u.at(torsion_idx[k], j), moduli[k]);

    // functionals vanishing on the image; Hermite reduction makes the free
    // coordinates independent of the reduction path inside the SNF
    IntMatrix free_block(m - d.rank, m);
    for (std::size_t i = d.rank; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) free_block.at(i - d.rank, j) = d.u.at(i, j);
    IntMatrix free_rows = hermite_row_basis(free_block);
    assert(free_rows.rows() == m - d.rank);

    AbelianGroup group{m - d.rank, moduli};
    return CokernelMap(std::move(group), std::move(free_rows), std::move(torsion_rows),
                       std::move(moduli));
}

}  // namespace toriclog
