#pragma once

// Creative telescoping for integrands F(x, t) = R(x, t) K(x): find
// P = sum_i a_i(t) (d/dt)^i and a rational multiplier y with
//
//     P[F] = d/dx (y F),
//
// then evaluate the boundary term y F at the interval ends.

#include <optional>
#include <vector>

#include "cfint/genfun.hpp"
#include "cfint/kernel.hpp"
#include "cfint/linalg.hpp"

namespace cfint {

struct Telescoper {
  int order = 0;
  std::vector<UPoly> opcoeffs;  // a_0 .. a_order, polynomials in t
  BRatFunc certificate;         // y, so that the certificate is y * F

  friend bool operator==(const Telescoper&, const Telescoper&) = default;
};

// Operators of exactly this order (or lower, if the ansatz only admits
// solutions with a vanishing top coefficient); nullopt if none.
std::optional<Telescoper> telescope_at_order(const BivariateGF& gf, const Kernel& kernel, int order,
                                             Exec exec = Exec::parallel);

// Smallest order 0, 1, ..., max_order. Throws NoTelescoperFound.
Telescoper telescope(const BivariateGF& gf, const Kernel& kernel, int max_order, Exec exec = Exec::parallel);

// Checks sum a_i (D_t^i F)/F == (D_x (y F))/F as rational functions,
// computed by direct differentiation.
bool verify_certificate(const BivariateGF& gf, const Kernel& kernel, const Telescoper& tel);

// C(beta, t) - C(alpha, t) for C = y F. Throws BoundaryNotEvaluable when
// the limit at an endpoint is infinite or involves the value of the
// transcendental part of K.
URatFunc boundary_rhs(const BivariateGF& gf, const Kernel& kernel, const Telescoper& tel, const Rational& alpha,
                      const Rational& beta);

}  // namespace cfint
