#include "doctest.h"

#include <boost/math/constants/constants.hpp>

#include "cfint/oracle.hpp"
#include "cfint/parser.hpp"
#include "support/random.hpp"
#include "support/series.hpp"

using namespace cfint;
using cfint::testing::Rng;

namespace {

const BigFloat kPi = boost::math::constants::pi<BigFloat>();

Kernel polynomial_kernel(const char* s) { return Kernel{parse_univariate(s, Var::x), URatFunc()}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("exact terms") {
  const IntegralProblem cheb{chebyshev_t(), trivial_kernel(), Rational(-1), Rational(1)};
  CHECK(exact_term(cheb, 2) == Rational(-2, 3));
  CHECK(exact_term(cheb, 1) == Rational(0));
  for (int n = 1; n < 20; n += 2) CHECK(exact_term(cheb, n).is_zero());

  const IntegralProblem powers{CFiniteSeq({parse_upoly("x", Var::x)}, {UPoly(1)}), trivial_kernel(), Rational(0),
                               Rational(1)};
  for (int n = 0; n <= 30; ++n) CHECK(exact_term(powers, n) == Rational(1) / Rational(n + 1));

  const IntegralProblem weighted{chebyshev_t(), chebyshev_weight(), Rational(-1), Rational(1)};
  CHECK(kind_of([&] { (void)exact_term(weighted, 0); }) == ErrorKind::ExactOracleUnavailable);
  const IntegralProblem backwards{chebyshev_t(), trivial_kernel(), Rational(1), Rational(-1)};
  CHECK(kind_of([&] { (void)exact_term(backwards, 0); }) == ErrorKind::InvalidInput);
}

TEST_CASE("exact terms are linear in the kernel and the sequence") {
  Rng rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const CFiniteSeq s = cfint::testing::random_cfinite(rng, 2, 1, 3);
    const UPoly k1 = cfint::testing::random_upoly(rng, 3);
    const UPoly k2 = cfint::testing::random_upoly(rng, 3);
    const Rational lo = cfint::testing::random_rational(rng, 3);
    const Rational hi = lo + cfint::testing::random_nonzero_rational(rng, 3) * cfint::testing::random_nonzero_rational(rng, 3) + Rational(1, 100);
    const Rational a = cfint::testing::random_rational(rng);
    const Rational b = cfint::testing::random_rational(rng);
    if (!(lo < hi)) continue;
    const int n = static_cast<int>(cfint::testing::uniform(rng, 0, 8));

    auto with_kernel = [&](const UPoly& k) {
      return exact_term(IntegralProblem{s, Kernel{URatFunc(k), URatFunc()}, lo, hi}, n);
    };
    CHECK(with_kernel(scale(k1, a) + scale(k2, b)) == a * with_kernel(k1) + b * with_kernel(k2));

    std::vector<UPoly> init2;
    std::vector<UPoly> mixed;
    for (std::size_t i = 0; i < s.init().size(); ++i) {
      init2.push_back(cfint::testing::random_integer_upoly(rng, 1, 3));
      mixed.push_back(scale(s.init()[i], a) + scale(init2.back(), b));
    }
    const CFiniteSeq s2(s.coeffs(), init2);
    const CFiniteSeq sm(s.coeffs(), mixed);
    const Kernel k{URatFunc(k1), URatFunc()};
    CHECK(exact_term(IntegralProblem{sm, k, lo, hi}, n) ==
          a * exact_term(IntegralProblem{s, k, lo, hi}, n) + b * exact_term(IntegralProblem{s2, k, lo, hi}, n));
    CHECK(exact_term(IntegralProblem{s, k, lo, hi}, n) == cfint::testing::integrate(term(s, n) * k1, lo, hi));
  }
}

TEST_CASE("Chebyshev weight by quadrature") {
  const IntegralProblem weighted{chebyshev_t(), chebyshev_weight(), Rational(-1), Rational(1)};
  CHECK(abs(numeric_term(weighted, 0, 30) - kPi) < BigFloat("1e-28"));
  CHECK(abs(numeric_term(weighted, 3, 30)) < BigFloat("1e-28"));
  CHECK(abs(numeric_term(weighted, 2, 30)) < BigFloat("1e-28"));

  const IntegralProblem squares{power(chebyshev_t(), 2), chebyshev_weight(), Rational(-1), Rational(1)};
  const auto v = numeric_terms(squares, 7, 30);
  CHECK(abs(v[0] - kPi) < BigFloat("1e-28"));
  for (std::size_t n = 1; n < v.size(); ++n) CHECK(abs(v[n] - kPi / 2) < BigFloat("1e-28"));
}

TEST_CASE("power-form kernels") {
  // rho = (1/2)/(x+1): K = sqrt(1+x); the integral over [-1,1] is 4 sqrt(2)/3.
  const Kernel root{URatFunc(1), parse_univariate("1/(2*(x+1))", Var::x)};
  const IntegralProblem p{constant_one(), root, Rational(-1), Rational(1)};
  CHECK(abs(numeric_term(p, 0, 40) - 4 * sqrt(BigFloat(2)) / 3) < BigFloat("1e-38"));

  // Rational prefactor: integral of 1/(2+x) over [0,1] is log(3/2).
  const Kernel rational_k{parse_univariate("1/(2+x)", Var::x), URatFunc()};
  const IntegralProblem q{constant_one(), rational_k, Rational(0), Rational(1)};
  CHECK(abs(numeric_term(q, 0, 40) - log(BigFloat(3) / 2)) < BigFloat("1e-38"));

  const Kernel expo{URatFunc(1), URatFunc(1)};
  CHECK(kind_of([&] { (void)numeric_term(IntegralProblem{constant_one(), expo, Rational(0), Rational(1)}, 0, 20); }) ==
        ErrorKind::KernelNotEvaluable);
  CHECK(kind_of([&] { (void)numeric_term(p, 0, 200); }) == ErrorKind::InvalidInput);
}

TEST_CASE("quadrature agrees with exact terms on polynomial kernels") {
  const IntegralProblem cheb{chebyshev_t(), polynomial_kernel("1+x^2"), Rational(-1), Rational(2)};
  const auto exact = exact_terms(cheb, 21);
  const auto approx = numeric_terms(cheb, 21, 30);
  for (std::size_t n = 0; n < exact.size(); ++n)
    CHECK(abs(approx[n] - to_big(exact[n])) < BigFloat("1e-25") * std::max(BigFloat(1), BigFloat(abs(approx[n]))));
}

TEST_CASE("serial and parallel batches agree") {
  const IntegralProblem cheb{power(chebyshev_t(), 2), trivial_kernel(), Rational(-1), Rational(1)};
  CHECK(exact_terms(cheb, 40, Exec::serial) == exact_terms(cheb, 40, Exec::parallel));
  const IntegralProblem weighted{chebyshev_t(), chebyshev_weight(), Rational(-1), Rational(1)};
  CHECK(numeric_terms(weighted, 6, 20, Exec::serial) == numeric_terms(weighted, 6, 20, Exec::parallel));
}
