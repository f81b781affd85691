#pragma once

// Expression grammar shared by job files and reports:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= INTEGER ('^' exponent)?        right associative
//   primary := INTEGER | VARIABLE | '(' expr ')'
//
// Whitespace is ignored; implicit multiplication ("2x") is a syntax error.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cfint/ratfunc.hpp"

namespace cfint {

struct Expr {
  enum class Kind { Integer, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Integer;
  mpz_class value;        // Integer
  Var var = Var::x;       // Variable
  unsigned exponent = 0;  // Pow
  std::size_t position = 0;
  std::vector<Expr> args;
};

// Throws SyntaxError (with the 0-based offset in the message) or
// UnknownVariable for identifiers outside `allowed`.
Expr parse(std::string_view text, const std::set<Var>& allowed);

// Evaluates in rational-function arithmetic: x (or n) maps to the inner
// variable, t to the outer one. Throws DivisionByZeroExpr on division by an
// expression that evaluates to zero, InvalidInput if n is mixed with x or t.
BRatFunc lower(const Expr& e);

// parse + lower, projected to one variable. Throws InvalidInput when the
// expression depends on any other variable.
URatFunc parse_univariate(std::string_view text, Var v);
BRatFunc parse_bivariate(std::string_view text);

// Same, but the result must be a polynomial.
UPoly parse_upoly(std::string_view text, Var v);

}  // namespace cfint
