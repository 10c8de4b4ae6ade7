#include "toriclog/class_group.hpp"

#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace toriclog;

namespace {

IntMatrix make(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::vector<Integer> unit(std::size_t n, std::size_t i) {
    std::vector<Integer> e(n, Integer(0));
    e[i] = 1;
    return e;
}

}  // namespace

TEST_CASE("cokernel of the projective plane ray matrix") {
    // rows are the rays of the fan of the plane
    IntMatrix a = make({{1, 0}, {0, 1}, {-1, -1}});
    CokernelMap m = cokernel(a);
    CHECK(m.group().free_rank == 1);
    CHECK(m.group().invariant_factors.empty());
    // all three coordinate classes coincide and generate
    ClassElement d0 = m.apply(unit(3, 0));
    ClassElement d1 = m.apply(unit(3, 1));
    ClassElement d2 = m.apply(unit(3, 2));
    CHECK(d0 == d1);
    CHECK(d1 == d2);
    CHECK(d0.free == std::vector<Integer>{1});
}

TEST_CASE("cokernel of the quadric surface ray matrix") {
    IntMatrix a = make({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CokernelMap m = cokernel(a);
    CHECK(m.group().free_rank == 2);
    CHECK(m.group().invariant_factors.empty());
    ClassElement d0 = m.apply(unit(4, 0));
    ClassElement d1 = m.apply(unit(4, 1));
    ClassElement d2 = m.apply(unit(4, 2));
    ClassElement d3 = m.apply(unit(4, 3));
    CHECK(d0 == d1);
    CHECK(d2 == d3);
    // canonical coordinates after Hermite reduction of the functionals
    CHECK(d0.free == std::vector<Integer>{1, 0});
    CHECK(d2.free == std::vector<Integer>{0, 1});
}

TEST_CASE("cokernel of a weighted plane ray matrix") {
    // ray order chosen so the weights come out as (1,1,2)
    IntMatrix a = make({{1, 0}, {-1, -2}, {0, 1}});
    CokernelMap m = cokernel(a);
    CHECK(m.group().free_rank == 1);
    CHECK(m.group().invariant_factors.empty());
    CHECK(m.apply(unit(3, 0)).free == std::vector<Integer>{1});
    CHECK(m.apply(unit(3, 1)).free == std::vector<Integer>{1});
    CHECK(m.apply(unit(3, 2)).free == std::vector<Integer>{2});
}

TEST_CASE("cokernel with torsion quotient") {
    // rays (1,1) and (1,-1): the quotient is Z/2
    IntMatrix a = make({{1, 1}, {1, -1}});
    CokernelMap m = cokernel(a);
    CHECK(m.group().free_rank == 0);
    REQUIRE(m.group().invariant_factors.size() == 1);
    CHECK(m.group().invariant_factors[0] == 2);
    ClassElement d0 = m.apply(unit(2, 0));
    ClassElement d1 = m.apply(unit(2, 1));
    CHECK(!d0.is_zero());
    CHECK(d0 == d1);
    CHECK(m.add(d0, d1).is_zero());
}

TEST_CASE("cokernel merges torsion into invariant factor chain") {
    IntMatrix a = make({{2, 0}, {0, 3}});
    CokernelMap m = cokernel(a);
    CHECK(m.group().free_rank == 0);
    REQUIRE(m.group().invariant_factors.size() == 1);
    CHECK(m.group().invariant_factors[0] == 6);
}

TEST_CASE("projection kills the image") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int t = 0; t < 40; ++t) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
        CokernelMap m = cokernel(a);
        CHECK(m.group().free_rank == a.rows() - oracle::rank_by_minors(a));
        for (std::size_t j = 0; j < a.cols(); ++j) {
            CHECK(m.apply(a.col(j)).is_zero());
        }
        // projection is additive
        std::vector<Integer> v(a.rows()), w(a.rows());
        for (auto& x : v) x = entry(rng);
        for (auto& x : w) x = entry(rng);
        std::vector<Integer> vw(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) vw[i] = v[i] + w[i];
        CHECK(m.apply(vw) == m.add(m.apply(v), m.apply(w)));
        CHECK(m.subtract(m.apply(v), m.apply(v)).is_zero());
    }
}

TEST_CASE("class element ordering and printing") {
    ClassElement a{{Integer(1), Integer(0)}, {}};
    ClassElement b{{Integer(1), Integer(1)}, {}};
    CHECK(a < b);
    CHECK(!(b < a));
    CHECK(a.to_string() == "(1,0)");
    ClassElement c{{Integer(-2)}, {Integer(1)}};
    CHECK(c.to_string() == "(-2;1)");
    AbelianGroup g{2, {Integer(2), Integer(4)}};
    CHECK(g.to_string() == "Z^2 x Z/2 x Z/4");
}
