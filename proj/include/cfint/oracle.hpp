#pragma once

// Direct computation of a(n) = integral over [alpha, beta] of P_n(x) K(x):
// exactly by the power rule when K is a polynomial, otherwise by tanh-sinh
// quadrature in BigFloat.

#include <optional>
#include <vector>

#include "cfint/cfinite.hpp"
#include "cfint/kernel.hpp"
#include "cfint/linalg.hpp"
#include "cfint/numeric.hpp"

namespace cfint {

struct IntegralProblem {
  CFiniteSeq seq;
  Kernel kernel;
  Rational alpha;
  Rational beta;
};

bool has_exact_oracle(const Kernel& kernel);

// exp(integral of rho) = |v|^c when rho = c v'/v (v monic); rational
// kernels give v = 1, c = 0.
struct PowerForm {
  UPoly v;
  Rational c;
};
std::optional<PowerForm> power_form(const Kernel& kernel);

// Throws ExactOracleUnavailable for non-polynomial kernels.
Rational exact_term(const IntegralProblem& prob, int n);
std::vector<Rational> exact_terms(const IntegralProblem& prob, int count, Exec exec = Exec::parallel);

// The transcendental part of K must have the form |v|^c, that is
// rho = c v'/v with v monic and c rational; x/(1-x^2) and c/(x-a) are the
// usual cases. Throws KernelNotEvaluable otherwise, QuadratureFailed if the
// estimate does not settle to 10^-precision (relative once |a(n)| > 1)
// within 12 halvings of the step.
BigFloat numeric_term(const IntegralProblem& prob, int n, int precision);
std::vector<BigFloat> numeric_terms(const IntegralProblem& prob, int count, int precision,
                                    Exec exec = Exec::parallel);

}  // namespace cfint
