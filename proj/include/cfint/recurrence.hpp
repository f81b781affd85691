#pragma once

// Linear recurrences with polynomial coefficients,
//
//     sum_{i=0..r} c_i(n) a(n+i) = 0   for n >= threshold,
//
// obtained from a linear ODE for f(t) = sum a(n) t^n with a rational
// right-hand side, or from guessing.

#include <map>
#include <vector>

#include "cfint/numeric.hpp"
#include "cfint/ratfunc.hpp"

namespace cfint {

// One equation sum_k coeff[k] a(k) = value that holds below the threshold.
struct ExceptionalEquation {
  std::map<int, Rational> coeffs;
  Rational value;

  friend bool operator==(const ExceptionalEquation&, const ExceptionalEquation&) = default;
};

struct Recurrence {
  int order = 0;
  std::vector<UPoly> coeffs;  // c_0 .. c_order, polynomials in n
  int threshold = 0;
  std::vector<Rational> initial_terms;
  std::vector<int> singular;  // n >= threshold with c_order(n) = 0
  std::vector<ExceptionalEquation> exceptional;

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

// Coefficient of t^N in sum_b a_b(t) f^(b)(t) is sum_s C_s(N) [t^(N+s)] f;
// returns the nonzero C_s keyed by the shift s.
std::map<int, UPoly> shift_coefficients(const std::vector<UPoly>& opcoeffs);

// Throws ZeroOperator.
Recurrence ode_to_recurrence(const std::vector<UPoly>& opcoeffs, const URatFunc& rhs);

// Builds a recurrence from raw coefficients: content removal, sign, and
// singular indices of the leading coefficient from `threshold` on.
Recurrence make_recurrence(std::vector<UPoly> coeffs, int threshold);

// Number of leading terms unroll needs: order + threshold, extended past
// the last singular index.
int required_initials(const Recurrence& rec);

// Checks the exceptional equations and the recurrence against every term
// supplied, then keeps the first required_initials(rec) of them. Throws
// RecurrenceRefuted on a mismatch, InvalidInput if too few terms.
Recurrence attach_initials(Recurrence rec, const std::vector<Rational>& terms);

// Throws SingularLeadingCoefficient when a needed term is not determined.
std::vector<Rational> unroll(const Recurrence& rec, int count);

// Same recursion in floating point, seeded with `seeds` (at least
// required_initials(rec) of them) instead of the exact initial terms.
std::vector<BigFloat> unroll_numeric(const Recurrence& rec, const std::vector<BigFloat>& seeds, int count);

// Every window of `terms` at or past the threshold satisfies the recurrence.
bool annihilates(const Recurrence& rec, const std::vector<Rational>& terms);

// Largest residual |sum c_i a(n+i)| / max(1, sum |c_i a(n+i)|) over the
// windows and the exceptional equations that fit in `terms`.
BigFloat max_residual(const Recurrence& rec, const std::vector<BigFloat>& terms);

}  // namespace cfint
