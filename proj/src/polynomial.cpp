#include "toriclog/polynomial.hpp"

#include "toriclog/errors.hpp"

#include <cassert>

namespace toriclog {

namespace {

// callers may hand us mpq values built from raw num/den pairs
Rational canon(const Rational& c) {
    Rational out = c;
    out.canonicalize();
    return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponent(nvars, 0), canon(c));
    return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponent e, const Rational& c) {
    assert(e.size() == nvars);
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(std::move(e), canon(c));
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    assert(index < nvars);
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, std::move(e), Rational(1));
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

const std::pair<const Exponent, Rational>& Polynomial::leading_term() const {
    assert(!terms_.empty());
    return *terms_.rbegin();
}

Rational Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::set_coefficient(Exponent e, const Rational& c) {
    assert(e.size() == nvars_);
    if (c == 0) terms_.erase(e);
    else terms_[std::move(e)] = canon(c);
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    assert(nvars_ == rhs.nvars_);
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    assert(nvars_ == rhs.nvars_);
    Polynomial out(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            Exponent e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(e), c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial Polynomial::scale(const Rational& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    Rational f = canon(c);
    for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * f);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = Polynomial::constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    assert(var < nvars_);
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent de = e;
        de[var] -= 1;
        out.terms_.emplace(std::move(de), c * Rational(e[var]));
    }
    return out;
}

std::int32_t Polynomial::degree_in(std::size_t var) const {
    std::int32_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw Error("InexactDivision", "division by the zero polynomial");
    Polynomial rem = p;
    Polynomial quot(p.nvars());
    const auto& [qe, qc] = q.leading_term();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        Exponent e(rem.nvars());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = re[i] - qe[i];
            if (e[i] < 0) throw inexact_division();
        }
        Polynomial t = Polynomial::monomial(p.nvars(), std::move(e), rc / qc);
        quot = quot + t;
        rem = rem - t * q;
    }
    return quot;
}

Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = int_gcd(num_gcd, c.get_num());
        den_lcm = int_lcm(den_lcm, c.get_den());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sgn(p.leading_term().second) < 0) scale = -scale;
    return p.scale(scale);
}

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
    assert(names.size() == p.nvars());
    if (p.is_zero()) return "0";
    std::string out;
    // iterate graded-lex descending so the leading term comes first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        std::string mono = monomial_string(e, names);
        if (mono.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + "*" + mono;
        }
    }
    return out;
}

}  // namespace toriclog
