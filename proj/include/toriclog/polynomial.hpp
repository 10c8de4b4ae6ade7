/*
 * Sparse multivariate polynomials over the rationals. Terms are held in a map
 * keyed by exponent vector under graded lexicographic order, so iteration and
 * printing are canonical. All arithmetic is exact.
 */
#pragma once

#include "toriclog/errors.hpp"
#include "toriclog/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace toriclog {

using Exponent = std::vector<std::int32_t>;

inline std::int64_t total_degree(const Exponent& e) {
    std::int64_t s = 0;
    for (auto x : e) s += x;
    return s;
}

// total degree first, then lexicographic on entries
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        std::int64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexLess>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial monomial(std::size_t nvars, Exponent e, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // graded-lex maximal term; polynomial must be nonzero
    const std::pair<const Exponent, Rational>& leading_term() const;

    Rational coefficient(const Exponent& e) const;
    void set_coefficient(Exponent e, const Rational& c);  // erases on c == 0

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scale(const Rational& c) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& rhs) const = default;

    Polynomial derivative(std::size_t var) const;

    // largest exponent of var appearing, -1 for the zero polynomial
    std::int32_t degree_in(std::size_t var) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

// Quotient p / q when the division is exact; throws InexactDivision otherwise.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

// gcd over Q[x_1..x_r], normalized to integer content 1 and positive leading
// coefficient (graded lex). gcd(0, 0) = 0, gcd(p, 0) = normalize(p).
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

// Scale a nonzero polynomial to integer coefficients with content 1 and
// positive leading coefficient.
Polynomial normalize_primitive(const Polynomial& p);

// Canonical display: graded-lex descending, explicit '*', '^' powers,
// rational coefficients as p/q. Parses back to an equal polynomial.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names);

}  // namespace toriclog
