/*
 * Exact scalar types. Integers and rationals are GMP-backed; rationals are
 * kept canonical (coprime numerator/denominator, positive denominator).
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace toriclog {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Quotient of an exact division; only valid when b divides a.
inline Integer div_exact(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Integer& d, const Integer& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Euclidean remainder in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Floor quotient, pairs with mod_floor.
inline Integer div_floor(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline int sgn(const Integer& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rational& a) { return mpq_sgn(a.get_mpq_t()); }

inline Rational make_rational(Integer num, Integer den) {
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// floor(a) for rational a
inline Integer rat_floor(const Rational& a) {
    return div_floor(a.get_num(), a.get_den());
}

inline Integer rat_ceil(const Rational& a) {
    return ceil_div(a.get_num(), a.get_den());
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

// "p/q" form, also for integral values ("3/1"), so the format is uniform.
inline std::string to_fraction_string(const Rational& a) {
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// Shortest faithful form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return to_fraction_string(a);
}

inline bool fits_double_safe(const Integer& a) {
    static const Integer kSafe("9007199254740991");  // 2^53 - 1
    return abs(a) <= kSafe;
}

}  // namespace toriclog
