#include "toriclog/polynomial.hpp"

#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace toriclog;
using testutil::names_xyz;
using testutil::random_poly;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 30; ++t) {
        Polynomial p = random_poly(rng, 3, 3, 4);
        Polynomial q = random_poly(rng, 3, 3, 4);
        Polynomial r = random_poly(rng, 3, 3, 4);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Polynomial(3));
        CHECK(p * Polynomial::constant(3, 1) == p);
        CHECK((p * Polynomial(3)).is_zero());
    }
}

TEST_CASE("graded lex ordering of terms") {
    // x^2 > x*y > y^2 > x > y > 1 for x before y
    Polynomial p = var(2, 0) * var(2, 0) + var(2, 0) * var(2, 1) + var(2, 1) * var(2, 1) +
                   var(2, 0) + var(2, 1) + Polynomial::constant(2, 1);
    std::vector<Exponent> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    // map iterates ascending; leading term is the last
    CHECK(order.front() == Exponent{0, 0});
    CHECK(order.back() == Exponent{2, 0});
    CHECK(p.leading_term().first == Exponent{2, 0});
    // same total degree: lex on entries decides
    GradedLexLess less;
    CHECK(less(Exponent{1, 1}, Exponent{2, 0}));
    CHECK(less(Exponent{0, 2}, Exponent{1, 1}));
    CHECK(less(Exponent{0, 0}, Exponent{0, 1}));
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937 rng(77);
    for (int t = 0; t < 25; ++t) {
        Polynomial p = random_poly(rng, 3, 3, 4);
        Polynomial q = random_poly(rng, 3, 3, 4);
        for (std::size_t v = 0; v < 3; ++v) {
            CHECK((p + q).derivative(v) == p.derivative(v) + q.derivative(v));
            CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
        }
    }
    // frozen small case: d/dx (x^2*y + 3x) = 2xy + 3
    Polynomial f = var(2, 0).pow(2) * var(2, 1) + var(2, 0).scale(3);
    Polynomial expect = var(2, 0) * var(2, 1) * Polynomial::constant(2, 2) + Polynomial::constant(2, 3);
    CHECK(f.derivative(0) == expect);
    CHECK(f.derivative(1) == var(2, 0).pow(2));
}

TEST_CASE("exact division recovers known factors") {
    Polynomial x = var(2, 0), y = var(2, 1);
    Polynomial p = x * x - y * y;
    CHECK(exact_divide(p, x + y) == x - y);
    CHECK(exact_divide(p, x - y) == x + y);
    CHECK_THROWS_WITH_AS(exact_divide(x * x + Polynomial::constant(2, 1), x + y),
                         doctest::Contains("remainder"), Error);
    CHECK_THROWS_AS(exact_divide(x, Polynomial(2)), Error);  // division by zero
    CHECK(exact_divide(Polynomial(2), x).is_zero());
}

TEST_CASE("exact division round trips on random products") {
    std::mt19937 rng(4096);
    for (int t = 0; t < 30; ++t) {
        Polynomial p = testutil::random_nonzero_poly(rng, 3, 2, 3);
        Polynomial q = testutil::random_nonzero_poly(rng, 3, 2, 3);
        CHECK(exact_divide(p * q, q) == p);
        CHECK(exact_divide(p * q, p) == q);
    }
}

TEST_CASE("printer emits canonical graded lex form") {
    auto names = names_xyz(3);
    Polynomial x = var(3, 0), y = var(3, 1), z = var(3, 2);
    CHECK(to_string(Polynomial(3), names) == "0");
    CHECK(to_string(x.pow(2) + y.scale(Rational(2, 3)) - z, names) == "x^2 + 2/3*y - z");
    CHECK(to_string(-x.pow(2) - x + Polynomial::constant(3, 3), names) == "-x^2 - x + 3");
    CHECK(to_string(x * y * z.pow(2), names) == "x*y*z^2");
    CHECK(to_string(Polynomial::constant(3, Rational(-7, 2)), names) == "-7/2");
}

TEST_CASE("normalize primitive scales to integer content one") {
    Polynomial x = var(2, 0), y = var(2, 1);
    Polynomial p = x.scale(Rational(4, 6)) + y.scale(Rational(2, 3));  // (2/3)(x + y)
    CHECK(normalize_primitive(p) == x + y);
    CHECK(normalize_primitive(-(x + y)) == x + y);  // positive leading coefficient
    Polynomial q = x.scale(6) + y.scale(9);
    CHECK(normalize_primitive(q) == x.scale(2) + y.scale(3));
}
