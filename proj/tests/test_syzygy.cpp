#include "toriclog/syzygy.hpp"

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "toriclog/parser.hpp"
#include "toriclog/qmatrix.hpp"

using namespace toriclog;

namespace {

Polynomial parse3(const std::string& s) { return parse_polynomial(s, {"x", "y", "z"}); }

Polynomial parse4(const std::string& s) { return parse_polynomial(s, {"x0", "x1", "y0", "y1"}); }

// random homogeneous polynomial in a given class, zero if the piece is empty
Polynomial random_section(std::mt19937& rng, const ToricData& td, const ClassElement& cls) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Polynomial out(td.ray_count());
    for (const auto& e : td.monomial_basis(cls)) {
        int c = coef(rng);
        if (c != 0) out = out + Polynomial::monomial(td.ray_count(), e, c);
    }
    return out;
}

// coordinates of a polynomial vector in the per-slot monomial bases
QVec flatten(const ToricData& td, const PolyVector& v,
             const std::vector<std::vector<Exponent>>& slots) {
    QVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (const auto& e : slots[i]) out.push_back(v[i].coefficient(e));
    return out;
}

std::vector<std::vector<Exponent>> slot_bases(const ToricData& td, const ClassElement& kappa) {
    std::vector<std::vector<Exponent>> out;
    for (std::size_t i = 0; i < td.ray_count(); ++i)
        out.push_back(td.monomial_basis(td.class_map().add(kappa, td.degree(i))));
    return out;
}

}  // namespace

TEST_CASE("gradients of plane divisors") {
    ToricData td = build_variety(fixtures::p2(), true, true);
    PolyVector g = gradient(td, parse3("x*y*z"));
    CHECK(g[0] == parse3("y*z"));
    CHECK(g[1] == parse3("x*z"));
    CHECK(g[2] == parse3("x*y"));

    PolyVector h = gradient(td, parse3("x^3 + y^3 + z^3"));
    CHECK(h[0] == parse3("3*x^2"));
    CHECK(h[1] == parse3("3*y^2"));
    CHECK(h[2] == parse3("3*z^2"));
}

TEST_CASE("jacobian rows are gradients") {
    ToricData td = build_variety(fixtures::p1p1(), true, true);
    auto jac = jacobian(td, {parse4("x0*y0"), parse4("x1*y1")});
    REQUIRE(jac.size() == 2);
    CHECK(jac[0][0] == parse4("y0"));
    CHECK(jac[0][1] == Polynomial(4));
    CHECK(jac[0][2] == parse4("x0"));
    CHECK(jac[1][1] == parse4("y1"));
    CHECK(jac[1][3] == parse4("x1"));

    // constants are homogeneous of class zero; their row is zero
    auto flat = jacobian(td, {Polynomial::constant(4, 7)});
    for (const auto& entry : flat[0]) CHECK(entry.is_zero());
}

TEST_CASE("euler identities hold for every functional") {
    std::mt19937 rng(424242);
    for (const Fan& fan : {fixtures::p2(), fixtures::p1p1(), fixtures::weighted112(),
                           fixtures::hirzebruch(1)}) {
        ToricData td = build_variety(fan, true, true);
        for (int t = 0; t < 8; ++t) {
            // a random effective class built from ray degrees
            std::uniform_int_distribution<int> pick(0, static_cast<int>(td.ray_count()) - 1);
            ClassElement cls = td.class_map().add(td.degree(pick(rng)), td.degree(pick(rng)));
            Polynomial f = random_section(rng, td, cls);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < td.picard_rank(); ++j)
                CHECK(euler_relation_check(td, f, j));
        }
    }
}

TEST_CASE("euler identity fixed instance") {
    ToricData td = build_variety(fixtures::p1p1(), true, true);
    Polynomial f = parse4("x0^2*y0*y1");
    CHECK(euler_relation_check(td, f, 0));
    CHECK(euler_relation_check(td, f, 1));
}

TEST_CASE("translation invariant cubic has the diagonal syzygy") {
    ToricData td = build_variety(fixtures::p2(), true, true);
    Polynomial b = parse3("(x - y)*(y - z)*(x - z)");
    ClassElement minus_one = td.class_map().negate(td.degree(0));
    SyzygySpace sp = syzygy_basis(td, {b}, minus_one);
    REQUIRE(sp.basis.size() == 1);
    const PolyVector& mu = sp.basis[0].body;
    CHECK(mu[0] == mu[1]);
    CHECK(mu[1] == mu[2]);
    CHECK(mu[0].is_constant());
    CHECK(!mu[0].is_zero());

    Polynomial rel(3);
    for (std::size_t i = 0; i < 3; ++i) rel = rel + mu[i] * b.derivative(i);
    CHECK(rel.is_zero());
}

TEST_CASE("split biquadratic carries block syzygies") {
    ToricData td = build_variety(fixtures::p1p1(), true, true);
    Polynomial f1 = parse4("x0^2 + x1^2");
    Polynomial f2 = parse4("y0^2 + 3*y1^2");
    Polynomial f = f1 * f2;
    ClassElement zero = td.class_map().zero();
    SyzygySpace sp = syzygy_basis(td, {f}, zero);
    CHECK(sp.basis.size() >= 2);

    PolyVector block1 = {f1.derivative(1), -f1.derivative(0), Polynomial(4), Polynomial(4)};
    PolyVector block2 = {Polynomial(4), Polynomial(4), f2.derivative(3), -f2.derivative(2)};
    auto slots = slot_bases(td, zero);
    QMat span;
    for (const auto& v : sp.basis) span.push_back(flatten(td, v.body, slots));
    CHECK(q_in_span(span, flatten(td, block1, slots)));
    CHECK(q_in_span(span, flatten(td, block2, slots)));
}

TEST_CASE("empty coefficient pieces give the zero space") {
    ToricData td = build_variety(fixtures::p2(), true, true);
    ClassElement low = td.class_map().scale(-5, td.degree(0));
    SyzygySpace sp = syzygy_basis(td, {parse3("x*y*z")}, low);
    CHECK(sp.basis.empty());
}

TEST_CASE("normal crossing divisor extended sections at level zero") {
    ToricData td = build_variety(fixtures::p2(), true, true);
    Polynomial f = parse3("x*y*z");
    ClassElement zero = td.class_map().zero();

    SyzygySpace ext = extended_syzygy_basis(td, f, zero);
    CHECK(ext.basis.size() == 3);
    SyzygySpace plain = syzygy_basis(td, {f}, zero);
    CHECK(plain.basis.size() == 2);

    auto slots = slot_bases(td, zero);
    QMat span;
    for (const auto& v : ext.basis) span.push_back(flatten(td, v.body, slots));
    PolyVector x_only = {parse3("x"), Polynomial(3), Polynomial(3)};
    PolyVector euler = {parse3("x"), parse3("y"), parse3("z")};
    CHECK(q_in_span(span, flatten(td, x_only, slots)));
    CHECK(q_in_span(span, flatten(td, euler, slots)));
    // plain sections embed into the extended space
    for (const auto& v : plain.basis) CHECK(q_in_span(span, flatten(td, v.body, slots)));
}

TEST_CASE("extended space at level zero always contains the euler vectors") {
    ToricData td = build_variety(fixtures::p1p1(), true, true);
    Polynomial f = parse4("x0^2*y0^2 + x1^2*y1^2");
    ClassElement zero = td.class_map().zero();
    SyzygySpace ext = extended_syzygy_basis(td, f, zero);
    CHECK(ext.basis.size() >= td.picard_rank());

    auto slots = slot_bases(td, zero);
    QMat span;
    for (const auto& v : ext.basis) span.push_back(flatten(td, v.body, slots));
    for (std::size_t j = 0; j < td.picard_rank(); ++j) {
        PolyVector eps(4, Polynomial(4));
        for (std::size_t i = 0; i < 4; ++i)
            eps[i] = Polynomial::variable(4, i).scale(Rational(td.euler_rows().at(j, i)));
        CHECK(q_in_span(span, flatten(td, eps, slots)));
    }
}

TEST_CASE("syzygy bases re-verify their defining relations") {
    std::mt19937 rng(515151);
    ToricData td = build_variety(fixtures::p2(), true, true);
    for (int t = 0; t < 6; ++t) {
        Polynomial f = random_section(rng, td, td.class_map().scale(3, td.degree(0)));
        if (f.is_zero()) continue;
        for (long k : {-1L, 0L, 1L}) {
            ClassElement kappa = td.class_map().scale(k, td.degree(0));
            SyzygySpace sp = syzygy_basis(td, {f}, kappa);
            for (const auto& v : sp.basis) {
                CHECK(is_syzygy(td, {f}, v));
                CHECK(syzygy_degrees_consistent(td, v));
            }
            SyzygySpace ext = extended_syzygy_basis(td, f, kappa);
            for (const auto& v : ext.basis) {
                CHECK(is_syzygy(td, {f}, v));
                CHECK(syzygy_degrees_consistent(td, v));
            }
        }
    }
}

TEST_CASE("pair syzygies are the intersection of the single spaces") {
    ToricData td = build_variety(fixtures::p2(), true, true);
    Polynomial f1 = parse3("x*y*z");
    Polynomial f2 = parse3("x^3 + y^3 + z^3");
    ClassElement zero = td.class_map().zero();
    SyzygySpace both = syzygy_basis(td, {f1, f2}, zero);
    SyzygySpace s1 = syzygy_basis(td, {f1}, zero);
    SyzygySpace s2 = syzygy_basis(td, {f2}, zero);

    auto slots = slot_bases(td, zero);
    QMat span1, span2;
    for (const auto& v : s1.basis) span1.push_back(flatten(td, v.body, slots));
    for (const auto& v : s2.basis) span2.push_back(flatten(td, v.body, slots));
    for (const auto& v : both.basis) {
        QVec w = flatten(td, v.body, slots);
        CHECK(q_in_span(span1, w));
        CHECK(q_in_span(span2, w));
    }
    // dimension count: members of both single spans that solve the other system
    QMat joint = span1;
    for (auto& row : span2) joint.push_back(row);
    std::size_t inter = span1.size() + span2.size() - q_rank(joint);
    CHECK(both.basis.size() == inter);
}

TEST_CASE("symbolic rank of polynomial matrices") {
    ToricData td = build_variety(fixtures::p1p1(), true, true);
    Polynomial f = parse4("x0*y0");
    CHECK(symbolic_rank(jacobian(td, {parse4("x0*y0"), parse4("x1*y1")})) == 2);
    CHECK(symbolic_rank(jacobian(td, {f, f * f})) == 1);
    CHECK(symbolic_rank({{Polynomial(2), Polynomial(2)}}) == 0);
    CHECK(symbolic_rank({{parse4("x0"), parse4("y0")}, {parse4("x1"), parse4("y1")}}) == 2);
    CHECK(symbolic_rank({{parse4("x0"), parse4("x0")}, {parse4("x1"), parse4("x1")}}) == 1);
}
