#pragma once

// Expression text in the parser grammar. Polynomials in x and n print with
// descending powers, polynomials in t ascending (series convention); a
// bivariate polynomial prints ascending in t and descending in x within
// each power of t.

#include <string>

#include "cfint/ratfunc.hpp"

namespace cfint {

std::string format(const UPoly& p, Var v);
std::string format(const BPoly& p, Var inner = Var::x, Var outer = Var::t);
std::string format(const URatFunc& f, Var v);
std::string format(const BRatFunc& f, Var inner = Var::x, Var outer = Var::t);

}  // namespace cfint
