#pragma once

// Reference computations used as oracles in tests: power-rule integration
// of polynomials and truncated power series arithmetic in t.

#include <vector>

#include "cfint/ratfunc.hpp"

namespace cfint::testing {

// Integral of p over [lo, hi] by the power rule.
inline Rational integrate(const UPoly& p, const Rational& lo, const Rational& hi) {
  Rational s;
  Rational plo(lo), phi(hi);
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k) / Rational(k + 1);
    s += c * (phi - plo);
    plo *= lo;
    phi *= hi;
  }
  return s;
}

// First `count` coefficients of f at t = 0 (denominator must not vanish there).
inline std::vector<Rational> series(const URatFunc& f, int count) {
  const Rational d0 = f.den().coeff(0);
  std::vector<Rational> out;
  for (int n = 0; n < count; ++n) {
    Rational c = f.num().coeff(n);
    for (int k = 1; k <= std::min(n, f.den().degree()); ++k) c -= f.den().coeff(k) * out[static_cast<std::size_t>(n - k)];
    out.push_back(c / d0);
  }
  return out;
}

// Coefficients of sum_i a_i(t) f^(i)(t) from those of f; only the first
// `count` are exact when f has count + order known coefficients.
inline std::vector<Rational> apply_operator(const std::vector<UPoly>& a, const std::vector<Rational>& f, int count) {
  std::vector<Rational> out(static_cast<std::size_t>(count));
  std::vector<Rational> d = f;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) {
      std::vector<Rational> nd;
      for (std::size_t k = 1; k < d.size(); ++k) nd.push_back(d[k] * Rational(static_cast<long>(k)));
      d = std::move(nd);
    }
    for (int j = 0; j <= a[i].degree(); ++j)
      for (int n = j; n < count; ++n)
        if (static_cast<std::size_t>(n - j) < d.size()) out[static_cast<std::size_t>(n)] += a[i].coeff(j) * d[static_cast<std::size_t>(n - j)];
  }
  return out;
}

}  // namespace cfint::testing
