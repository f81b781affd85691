#include "doctest.h"

#include "cfint/format.hpp"
#include "cfint/genfun.hpp"
#include "cfint/parser.hpp"
#include "support/random.hpp"

using namespace cfint;
using cfint::testing::Rng;

namespace {

UPoly px(const char* s) { return parse_upoly(s, Var::x); }

// Oracle: the truncated series N/D mod t^count is computed by long
// multiplication with the truncated inverse built from geometric sums, not
// by the recursion in taylor_coeffs.
std::vector<UPoly> series_oracle(const BPoly& num, const BPoly& den, int count) {
  // den = d0 * (1 - e) with e divisible by t, so 1/den = (1/d0) sum_k e^k.
  const UPoly d0 = den.coeff(0);
  const Rational c0 = d0.coeff(0);
  REQUIRE(d0.degree() == 0);
  BPoly e = scale(den, Rational(-1) / c0);
  e += BPoly(UPoly(1));
  BPoly inv(UPoly(1));
  BPoly power(UPoly(1));
  for (int k = 1; k < count; ++k) {
    power = power * e;
    inv += power;
  }
  const BPoly s = scale(num * inv, Rational(1) / c0);
  std::vector<UPoly> out;
  for (int n = 0; n < count; ++n) out.push_back(s.coeff(n));
  return out;
}

}  // namespace

TEST_CASE("generating function of Chebyshev T") {
  const BivariateGF gf = generating_function(chebyshev_t());
  CHECK(gf.value() == parse_bivariate("(1-x*t)/(1-2*x*t+t^2)"));
  CHECK(format(gf.value()) == "(1-x*t)/(1-2*x*t+t^2)");
  CHECK(series_oracle(gf.num(), gf.den(), 10) == terms(chebyshev_t(), 10));
  const auto first = taylor_coeffs(gf, 3);
  CHECK(first == std::vector<UPoly>{UPoly(1), px("x"), px("2*x^2-1")});
  CHECK(taylor_coeffs(gf, 14) == terms(chebyshev_t(), 14));
}

TEST_CASE("generating function of the constant sequence") {
  const BivariateGF gf = generating_function(constant_one());
  CHECK(gf.value() == parse_bivariate("1/(1-t)"));
  CHECK(taylor_coeffs(gf, 4) == std::vector<UPoly>(4, UPoly(1)));
}

TEST_CASE("generating function of the Fibonacci polynomials") {
  const CFiniteSeq fib({px("x"), UPoly(1)}, {UPoly(0), UPoly(1)});
  const BivariateGF gf = generating_function(fib);
  CHECK(gf.value() == parse_bivariate("t/(1-x*t-t^2)"));
  CHECK(series_oracle(gf.num(), gf.den(), 10) == terms(fib, 10));
}

TEST_CASE("expansion fails when the denominator vanishes at t = 0") {
  try {
    (void)taylor_coeffs(parse_bivariate("1/t"), 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotExpandable);
  }
  CHECK_THROWS_AS(BivariateGF(parse_bivariate("x/(t+t^2)")), Error);
  // 1/(x - t): constant term x does not divide the numerator.
  CHECK_THROWS_AS(taylor_coeffs(parse_bivariate("1/(x-t)"), 3), Error);
}

TEST_CASE("round trip for builtins and random sequences") {
  for (const char* name : {"chebyshev_T", "chebyshev_U", "constant_one"}) {
    const CFiniteSeq s = *builtin_sequence(name);
    const int count = 2 * s.order() + 10;
    CHECK(taylor_coeffs(generating_function(s), count) == terms(s, count));
  }
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const CFiniteSeq s = cfint::testing::random_cfinite(rng, 3, 2, 4);
    const int count = 2 * s.order() + 10;
    const BivariateGF gf = generating_function(s);
    CHECK_FALSE(gf.den().coeff(0).is_zero());
    CHECK(taylor_coeffs(gf, count) == terms(s, count));
  }
}
