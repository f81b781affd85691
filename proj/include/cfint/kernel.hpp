#pragma once

// Weight K(x) = prefactor(x) * exp(integral of rho): a rational prefactor
// times a hyperexponential part given by its logarithmic derivative rho.
// The Chebyshev weight 1/sqrt(1-x^2) is prefactor 1, rho = x/(1-x^2).

#include "cfint/ratfunc.hpp"

namespace cfint {

struct Kernel {
  URatFunc prefactor = URatFunc(1);
  URatFunc logderiv;

  bool is_rational() const { return logderiv.is_zero(); }
  bool is_polynomial() const { return is_rational() && prefactor.is_polynomial(); }

  friend bool operator==(const Kernel&, const Kernel&) = default;
};

inline Kernel trivial_kernel() { return Kernel{}; }

inline Kernel chebyshev_weight() {
  return Kernel{URatFunc(1), URatFunc(UPoly(std::vector<Rational>{0, 1}), UPoly(std::vector<Rational>{1, 0, -1}))};
}

// K'/K.
inline URatFunc log_derivative(const Kernel& k) {
  if (k.prefactor.is_zero()) throw Error(ErrorKind::InvalidInput, "kernel prefactor is zero");
  return derivative(k.prefactor) / k.prefactor + k.logderiv;
}

}  // namespace cfint
