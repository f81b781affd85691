#pragma once

// Ordinary generating function R(x, t) = sum_n P_n(x) t^n of a C-finite
// sequence, and its Taylor expansion back into the terms.

#include <vector>

#include "cfint/cfinite.hpp"
#include "cfint/ratfunc.hpp"

namespace cfint {

class BivariateGF {
 public:
  // Throws NotExpandable when the denominator vanishes at t = 0.
  explicit BivariateGF(BRatFunc value);

  const BRatFunc& value() const { return value_; }
  const BPoly& num() const { return value_.num(); }
  const BPoly& den() const { return value_.den(); }

  friend bool operator==(const BivariateGF&, const BivariateGF&) = default;

 private:
  BRatFunc value_;
};

BivariateGF generating_function(const CFiniteSeq& seq);

// First `count` Taylor coefficients at t = 0 via the recursion induced by
// the denominator. Throws NotExpandable if the constant term of the
// denominator is zero or does not divide the coefficients exactly.
std::vector<UPoly> taylor_coeffs(const BRatFunc& f, int count);

inline std::vector<UPoly> taylor_coeffs(const BivariateGF& gf, int count) {
  return taylor_coeffs(gf.value(), count);
}

}  // namespace cfint
