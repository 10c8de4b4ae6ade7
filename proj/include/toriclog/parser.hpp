#pragma once

#include "toriclog/polynomial.hpp"

#include <string>
#include <vector>

namespace toriclog {

/*
 * Recursive descent parser for polynomial expressions.
 *
 * Grammar:
 *   expr    := term (('+' | '-') term)*
 *   term    := unary ('*' unary)*
 *   unary   := ('+' | '-') unary | power
 *   power   := primary ('^' natural)?
 *   primary := rational | identifier | '(' expr ')'
 *   rational:= natural ('/' natural)?
 *
 * Identifiers must be declared variable names. Implicit multiplication is a
 * syntax error, as is '/' anywhere but between two integer literals.
 * Errors carry the byte offset of the offending token.
 */
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace toriclog
