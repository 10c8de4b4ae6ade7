#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace toriclog {

// Every failure mode carries a stable machine-readable code. The CLI maps any
// Error to exit status 2 together with the code, so scripts can dispatch on it
// without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct SyntaxError : Error {
    SyntaxError(std::size_t position, const std::string& message)
        : Error("SyntaxError", message + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct UnknownVariableError : Error {
    UnknownVariableError(std::string name, std::size_t position)
        : Error("UnknownVariable",
                "unknown variable '" + name + "' at offset " + std::to_string(position)),
          name(std::move(name)), position(position) {}
    std::string name;
    std::size_t position;
};

// Carries a printable witness pair of monomials with distinct classes.
struct NotHomogeneousError : Error {
    NotHomogeneousError(std::string a, std::string b)
        : Error("NotHomogeneous",
                "polynomial is not homogeneous: monomials " + a + " and " + b +
                    " have different classes"),
          monomial_a(std::move(a)), monomial_b(std::move(b)) {}
    std::string monomial_a;
    std::string monomial_b;
};

struct NotASyzygyError : Error {
    NotASyzygyError(std::size_t column, const std::string& detail)
        : Error("NotASyzygy", "column " + std::to_string(column) + ": " + detail),
          column(column) {}
    std::size_t column;
};

struct ZeroFreePartError : Error {
    explicit ZeroFreePartError(std::size_t index)
        : Error("ZeroFreePart",
                "degree of tuple entry " + std::to_string(index) +
                    " has zero free part; projective inputs need nonzero free degrees"),
          index(index) {}
    std::size_t index;
};

inline Error non_primitive_ray(std::size_t i) {
    return Error("NonPrimitiveRay", "ray " + std::to_string(i) + " is not primitive");
}
inline Error duplicate_ray(std::size_t i, std::size_t j) {
    return Error("DuplicateRay",
                 "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}
inline Error non_simplicial_cone(std::size_t c) {
    return Error("NonSimplicialCone",
                 "maximal cone " + std::to_string(c) + " has linearly dependent generators");
}
inline Error torus_factor() {
    return Error("TorusFactor", "rays do not span the ambient lattice");
}
inline Error unbounded_graded_piece(const std::string& cls) {
    return Error("UnboundedGradedPiece",
                 "graded piece " + cls + " is infinite dimensional; this contradicts the "
                 "complete flag on the input");
}
inline Error incomplete_variety(const std::string& op) {
    return Error("IncompleteVariety", op + " requires complete = true on the variety document");
}
inline Error zero_polynomial(const std::string& where) {
    return Error("ZeroPolynomial", "zero polynomial not allowed in " + where);
}
inline Error inexact_division() {
    return Error("InexactDivision", "polynomial division left a nonzero remainder");
}
inline Error wrong_syzygy_count(std::size_t got, std::size_t lo, std::size_t hi) {
    return Error("WrongSyzygyCount",
                 "got " + std::to_string(got) + " syzygy columns, need between " +
                     std::to_string(lo) + " and " + std::to_string(hi));
}
inline Error euler_coefficient_degenerate() {
    return Error("EulerCoefficientDegenerate",
                 "every Euler functional gives coefficient 0 for this divisor");
}
inline Error search_limit_exceeded(std::size_t limit) {
    return Error("SearchLimitExceeded",
                 "column combination count exceeds limit " + std::to_string(limit));
}
inline Error not_projective(const std::string& op) {
    return Error("NotProjective", op + " requires projective = true on the variety document");
}
inline Error tuple_too_small(std::size_t got) {
    return Error("TupleTooSmall",
                 "distribution checks need at least 2 polynomials, got " + std::to_string(got));
}
inline Error degenerate_profile() {
    return Error("DegenerateProfile", "subset rank condition needs degree rank at least 1");
}
inline Error document_error(const std::string& detail) {
    return Error("DocumentError", detail);
}

}  // namespace toriclog
