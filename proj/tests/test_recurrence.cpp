#include "doctest.h"

#include "cfint/parser.hpp"
#include "cfint/recurrence.hpp"
#include "support/random.hpp"
#include "support/series.hpp"

using namespace cfint;
using cfint::testing::Rng;

namespace {

UPoly pt(const char* s) { return parse_upoly(s, Var::t); }
UPoly pn(const char* s) { return parse_upoly(s, Var::n); }
URatFunc rt(const char* s) { return parse_univariate(s, Var::t); }

std::vector<Rational> harmonic(int count) {
  std::vector<Rational> v;
  for (int n = 0; n < count; ++n) v.push_back(Rational(1) / Rational(n + 1));
  return v;
}

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

TEST_CASE("harmonic denominators") {
  const Recurrence rec = ode_to_recurrence({pt("1-t"), pt("t*(1-t)")}, URatFunc(1));
  CHECK(rec.order == 1);
  CHECK(rec.coeffs == std::vector<UPoly>{pn("-n-1"), pn("n+2")});
  CHECK(rec.threshold == 0);
  REQUIRE(rec.exceptional.size() == 1);
  CHECK(rec.exceptional[0].coeffs == std::map<int, Rational>{{0, Rational(1)}});
  CHECK(rec.exceptional[0].value == Rational(1));

  const Recurrence with = attach_initials(rec, {Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4)});
  CHECK(with.initial_terms == std::vector<Rational>{Rational(1)});
  CHECK(unroll(with, 6) == harmonic(6));
  CHECK(unroll(with, 31) == harmonic(31));

  CHECK(kind_of([&] { (void)attach_initials(rec, {Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 5)}); }) ==
        ErrorKind::RecurrenceRefuted);
  // Right ratios, wrong a(0): only the exceptional equation catches it.
  CHECK(kind_of([&] { (void)attach_initials(rec, {Rational(2), Rational(1), Rational(2, 3)}); }) ==
        ErrorKind::RecurrenceRefuted);

  // The same ODE with the content 1-t divided out.
  const Recurrence reduced = ode_to_recurrence({UPoly(1), pt("t")}, rt("1/(1-t)"));
  CHECK(reduced.coeffs == rec.coeffs);
  CHECK(unroll(attach_initials(reduced, harmonic(10)), 31) == harmonic(31));
}

TEST_CASE("exponential and geometric series") {
  const Recurrence e = ode_to_recurrence({UPoly(-1), UPoly(1)}, URatFunc());
  CHECK(e.coeffs == std::vector<UPoly>{UPoly(-1), pn("n+1")});
  CHECK(e.threshold == 0);
  CHECK(e.exceptional.empty());
  const auto ex = unroll(attach_initials(e, {Rational(1)}), 6);
  CHECK(ex == std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24), Rational(1, 120)});

  const Recurrence g = ode_to_recurrence({UPoly(-1), pt("1-t")}, URatFunc());
  CHECK(g.coeffs == std::vector<UPoly>{UPoly(-1), UPoly(1)});
  CHECK(g.threshold == 0);
  CHECK(unroll(attach_initials(g, {Rational(2)}), 3) == std::vector<Rational>{2, 2, 2});
  CHECK(kind_of([] { (void)ode_to_recurrence({UPoly(), UPoly()}, URatFunc(1)); }) == ErrorKind::ZeroOperator);
}

TEST_CASE("singular leading coefficient") {
  const Recurrence rec = make_recurrence({UPoly(-1), pn("n-5")}, 0);
  CHECK(rec.singular == std::vector<int>{5});
  CHECK(required_initials(rec) == 7);
  std::vector<Rational> init(6, Rational(0));
  init.push_back(Rational(1));
  const auto a = unroll(attach_initials(rec, init), 9);
  CHECK(a[6] == Rational(1));
  CHECK(a[7] == Rational(1));
  CHECK(a[8] == Rational(1, 2));

  Recurrence bare = rec;
  bare.singular.clear();
  bare.initial_terms = {Rational(0)};
  CHECK(kind_of([&] { (void)unroll(bare, 9); }) == ErrorKind::SingularLeadingCoefficient);
  CHECK(kind_of([&] { (void)attach_initials(rec, std::vector<Rational>(3)); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("content removal raises the threshold past roots of the content") {
  // (n-3) [a(n+1) - a(n)]: the reduced equation says nothing at n = 3.
  const Recurrence rec = make_recurrence({pn("-(n-3)"), pn("n-3")}, 0);
  CHECK(rec.coeffs == std::vector<UPoly>{UPoly(-1), UPoly(1)});
  CHECK(rec.threshold == 4);
  // Leading zero coefficients shift the window.
  const Recurrence shifted = make_recurrence({UPoly(), UPoly(-1), UPoly(1)}, 0);
  CHECK(shifted.order == 1);
  CHECK(shifted.threshold == 1);
}

TEST_CASE("zero sequence satisfies any homogeneous recurrence") {
  const Recurrence rec = ode_to_recurrence({pt("1+t"), pt("t^2"), pt("3")}, URatFunc());
  const std::vector<Rational> zeros(12);
  CHECK(unroll(attach_initials(rec, zeros), 20) == std::vector<Rational>(20));
}

TEST_CASE("conversion is linear in the operator") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<UPoly> p1, p2, sum;
    const auto len = static_cast<std::size_t>(cfint::testing::uniform(rng, 1, 4));
    for (std::size_t i = 0; i < len; ++i) {
      p1.push_back(cfint::testing::random_upoly(rng, 3));
      p2.push_back(cfint::testing::random_upoly(rng, 3));
      sum.push_back(p1.back() + p2.back());
    }
    auto expected = shift_coefficients(p1);
    for (const auto& [s, c] : shift_coefficients(p2)) expected[s] += c;
    for (auto it = expected.begin(); it != expected.end();) it = it->second.is_zero() ? expected.erase(it) : std::next(it);
    CHECK(shift_coefficients(sum) == expected);
  }
}

TEST_CASE("series of rational functions satisfy the derived recurrence") {
  Rng rng(62);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    UPoly den = cfint::testing::random_upoly(rng, 3);
    if (den.coeff(0).is_zero()) den += UPoly(1);
    const URatFunc f(cfint::testing::random_upoly(rng, 3), den);
    std::vector<UPoly> op;
    const auto len = static_cast<std::size_t>(cfint::testing::uniform(rng, 1, 3));
    for (std::size_t i = 0; i < len; ++i) op.push_back(cfint::testing::random_integer_upoly(rng, 2, 3));
    if (op.back().is_zero()) op.back() = UPoly(1);

    URatFunc rhs;
    URatFunc d = f;
    for (std::size_t i = 0; i < op.size(); ++i) {
      if (i > 0) d = derivative(d);
      rhs += URatFunc(op[i]) * d;
    }
    const Recurrence rec = ode_to_recurrence(op, rhs);
    const auto a = cfint::testing::series(f, 40);
    Recurrence with;
    try {
      with = attach_initials(rec, a);
    } catch (const Error& e) {
      FAIL_CHECK("refuted: " << e.what());
      continue;
    }
    if (!with.singular.empty() && with.singular.back() + with.order >= 40) continue;
    CHECK(unroll(with, 40) == a);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("numeric unrolling") {
  const Recurrence rec = attach_initials(ode_to_recurrence({pt("1-t"), pt("t*(1-t)")}, URatFunc(1)), harmonic(5));
  const auto v = unroll_numeric(rec, {BigFloat(1)}, 31);
  for (int n = 0; n <= 30; ++n) CHECK(abs(v[static_cast<std::size_t>(n)] - BigFloat(1) / (n + 1)) < BigFloat("1e-90"));
  CHECK(max_residual(rec, v) < BigFloat("1e-90"));
  std::vector<BigFloat> bad = v;
  bad[7] += BigFloat("1e-3");
  CHECK(max_residual(rec, bad) > BigFloat("1e-5"));
}
