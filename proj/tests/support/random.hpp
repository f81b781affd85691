#pragma once

// Small random generators for property tests. Every generator takes the
// engine explicitly so each test owns a fixed seed.

#include <random>

#include "cfint/cfinite.hpp"
#include "cfint/ratfunc.hpp"

namespace cfint::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long range = 9) {
  const long num = uniform(rng, -range, range);
  const long den = uniform(rng, 1, range);
  return Rational(mpz_class(num), mpz_class(den));
}

inline Rational random_nonzero_rational(Rng& rng, long range = 9) {
  for (;;) {
    Rational r = random_rational(rng, range);
    if (!r.is_zero()) return r;
  }
}

inline UPoly random_upoly(Rng& rng, int max_degree, long range = 5) {
  std::vector<Rational> c;
  const int d = static_cast<int>(uniform(rng, 0, max_degree));
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, range));
  return UPoly(std::move(c));
}

inline UPoly random_integer_upoly(Rng& rng, int max_degree, long range) {
  std::vector<Rational> c;
  const int d = static_cast<int>(uniform(rng, 0, max_degree));
  for (int i = 0; i <= d; ++i) c.push_back(Rational(uniform(rng, -range, range)));
  return UPoly(std::move(c));
}

inline BPoly random_bpoly(Rng& rng, int max_t, int max_x, long range = 4) {
  std::vector<UPoly> c;
  const int d = static_cast<int>(uniform(rng, 0, max_t));
  for (int i = 0; i <= d; ++i) c.push_back(random_integer_upoly(rng, max_x, range));
  return BPoly(std::move(c));
}

inline BPoly random_nonzero_bpoly(Rng& rng, int max_t, int max_x, long range = 4) {
  for (;;) {
    BPoly p = random_bpoly(rng, max_t, max_x, range);
    if (!p.is_zero()) return p;
  }
}

inline BRatFunc random_bratfunc(Rng& rng, int max_t = 2, int max_x = 2) {
  return BRatFunc(random_bpoly(rng, max_t, max_x), random_nonzero_bpoly(rng, max_t, max_x));
}

// C-finite sequence with order <= max_order, integer coefficients in
// [-range, range] and coefficient degrees <= max_degree.
inline CFiniteSeq random_cfinite(Rng& rng, int max_order, int max_degree, long range) {
  const int order = static_cast<int>(uniform(rng, 1, max_order));
  std::vector<UPoly> coeffs;
  std::vector<UPoly> init;
  for (int i = 0; i < order; ++i) coeffs.push_back(random_integer_upoly(rng, max_degree, range));
  while (coeffs.back().is_zero()) coeffs.back() = random_integer_upoly(rng, max_degree, range);
  for (int i = 0; i < order; ++i) init.push_back(random_integer_upoly(rng, max_degree, range));
  return CFiniteSeq(std::move(coeffs), std::move(init));
}

}  // namespace cfint::testing
