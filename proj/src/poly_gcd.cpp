/*
 * Multivariate gcd over Q by recursion on the top variable: split off the
 * content (gcd of the coefficients, a polynomial in fewer variables), then run
 * a subresultant polynomial remainder sequence on the primitive parts. The
 * subresultant divisors keep intermediate coefficient growth polynomial
 * instead of exponential; every division below is exact by construction.
 */
#include "toriclog/polynomial.hpp"

#include <cassert>
#include <vector>

namespace toriclog {

namespace {

// dense univariate view in one variable; coefficients are free of it
struct UniPoly {
    std::size_t var = 0;
    std::vector<Polynomial> coef;  // index = degree, trimmed

    int deg() const { return static_cast<int>(coef.size()) - 1; }
    const Polynomial& lead() const { return coef.back(); }
};

void trim(UniPoly& u) {
    while (!u.coef.empty() && u.coef.back().is_zero()) u.coef.pop_back();
}

UniPoly to_uni(const Polynomial& p, std::size_t v) {
    UniPoly u;
    u.var = v;
    int d = p.degree_in(v);
    if (d < 0) return u;
    u.coef.assign(d + 1, Polynomial(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        Exponent base = e;
        std::int32_t k = base[v];
        base[v] = 0;
        u.coef[k] = u.coef[k] + Polynomial::monomial(p.nvars(), std::move(base), c);
    }
    trim(u);
    return u;
}

Polynomial from_uni(const UniPoly& u, std::size_t nvars) {
    Polynomial out(nvars);
    for (std::size_t k = 0; k < u.coef.size(); ++k) {
        Exponent e(nvars, 0);
        e[u.var] = static_cast<std::int32_t>(k);
        out = out + u.coef[k] * Polynomial::monomial(nvars, std::move(e), Rational(1));
    }
    return out;
}

UniPoly scale_coef(const UniPoly& u, const Polynomial& f) {
    UniPoly out = u;
    for (auto& c : out.coef) c = c * f;
    trim(out);
    return out;
}

UniPoly divide_coef(const UniPoly& u, const Polynomial& f) {
    UniPoly out = u;
    for (auto& c : out.coef) c = c.is_zero() ? c : exact_divide(c, f);
    return out;
}

// l * r - lr * x^shift * b, all in the shared top variable
UniPoly prem_step(const UniPoly& r, const Polynomial& l, const Polynomial& lr,
                  const UniPoly& b, int shift) {
    UniPoly out;
    out.var = r.var;
    std::size_t n = std::max(r.coef.size(), b.coef.size() + shift);
    std::size_t nv = l.nvars();
    out.coef.assign(n, Polynomial(nv));
    for (std::size_t k = 0; k < r.coef.size(); ++k) out.coef[k] = r.coef[k] * l;
    for (std::size_t k = 0; k < b.coef.size(); ++k)
        out.coef[k + shift] = out.coef[k + shift] - lr * b.coef[k];
    trim(out);
    return out;
}

// lc(b)^(deg a - deg b + 1) * a reduced mod b; degree strictly below deg b
UniPoly pseudo_remainder(UniPoly a, const UniPoly& b) {
    const Polynomial& l = b.lead();
    int delta = a.deg() - b.deg();
    for (int e = delta; e >= 0; --e) {
        if (a.deg() == b.deg() + e) {
            Polynomial lr = a.lead();
            a = prem_step(a, l, lr, b, e);
        } else {
            a = scale_coef(a, l);
        }
    }
    return a;
}

Polynomial content_of(const UniPoly& u) {
    Polynomial c(u.coef.empty() ? 0 : u.coef[0].nvars());
    for (const auto& x : u.coef) c = poly_gcd(c, x);
    return c;
}

// highest variable index appearing in either polynomial, or npos
std::size_t top_variable(const Polynomial& p, const Polynomial& q) {
    for (std::size_t v = p.nvars(); v-- > 0;) {
        if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return v;
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    assert(p.nvars() == q.nvars());
    const std::size_t nv = p.nvars();
    if (p.is_zero() && q.is_zero()) return Polynomial(nv);
    if (p.is_zero()) return normalize_primitive(q);
    if (q.is_zero()) return normalize_primitive(p);
    if (p.is_constant() || q.is_constant()) return Polynomial::constant(nv, Rational(1));

    std::size_t v = top_variable(p, q);
    assert(v != static_cast<std::size_t>(-1));
    UniPoly a = to_uni(p, v);
    UniPoly b = to_uni(q, v);

    Polynomial cont_a = content_of(a);
    Polynomial cont_b = content_of(b);
    Polynomial d = poly_gcd(cont_a, cont_b);
    a = divide_coef(a, cont_a);
    b = divide_coef(b, cont_b);

    if (a.deg() < b.deg()) std::swap(a, b);
    if (b.deg() == 0) {
        // primitive and v-free means a unit
        return normalize_primitive(d);
    }

    Polynomial g = Polynomial::constant(nv, Rational(1));
    Polynomial h = g;
    for (;;) {
        int delta = a.deg() - b.deg();
        UniPoly r = pseudo_remainder(a, b);
        if (r.coef.empty()) {
            Polynomial pp = from_uni(divide_coef(b, content_of(b)), nv);
            return normalize_primitive(d * pp);
        }
        if (r.deg() == 0) return normalize_primitive(d);
        a = b;
        Polynomial divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        b = divide_coef(r, divisor);
        g = a.lead();
        if (delta >= 1) {
            Polynomial num = g;
            for (int i = 1; i < delta; ++i) num = num * g;
            Polynomial den = Polynomial::constant(nv, Rational(1));
            for (int i = 1; i < delta; ++i) den = den * h;
            h = exact_divide(num, den);
        }
    }
}

}  // namespace toriclog
