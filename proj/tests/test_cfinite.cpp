#include "doctest.h"

#include "cfint/cfinite.hpp"
#include "cfint/format.hpp"
#include "cfint/parser.hpp"
#include "support/random.hpp"

using namespace cfint;
using cfint::testing::Rng;

namespace {

UPoly px(const char* s) { return parse_upoly(s, Var::x); }

std::vector<UPoly> pointwise_power(const std::vector<UPoly>& v, unsigned r) {
  std::vector<UPoly> out;
  for (const auto& p : v) out.push_back(pow(p, r));
  return out;
}

// x^n p(1/x) for a polynomial of degree <= n.
UPoly reflect(const UPoly& p, int n) { return reversed(p, n); }

// Sequences satisfying the reversal precondition whose reversal satisfies it
// too: deg p_i <= i with x^i | ... not required, q_j of exact degree j with
// nonzero constant term.
CFiniteSeq random_reversible(Rng& rng) {
  const int order = static_cast<int>(cfint::testing::uniform(rng, 1, 2));
  std::vector<UPoly> coeffs;
  std::vector<UPoly> init;
  for (int i = 1; i <= order; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k <= i; ++k) c.push_back(Rational(cfint::testing::uniform(rng, -3, 3)));
    if (i == order) c[0] = Rational(cfint::testing::uniform(rng, 1, 3));
    coeffs.emplace_back(std::move(c));
  }
  for (int j = 0; j < order; ++j) {
    std::vector<Rational> c;
    for (int k = 0; k <= j; ++k) c.push_back(Rational(cfint::testing::uniform(rng, 1, 3)));
    init.emplace_back(std::move(c));
  }
  return CFiniteSeq(std::move(coeffs), std::move(init));
}

}  // namespace

TEST_CASE("term of Chebyshev T") {
  const CFiniteSeq t = chebyshev_t();
  CHECK(term(t, 0) == UPoly(1));
  CHECK(term(t, 2) == px("2*x^2-1"));
  const UPoly t5 = term(t, 5);
  CHECK(t5 == px("16*x^5-20*x^3+5*x"));
  for (int n = 0; n <= 12; ++n) CHECK(evaluate(term(t, n), Rational(1)) == Rational(1));
  CHECK(format(term(t, 3), Var::x) == "4*x^3-3*x");
  CHECK_THROWS_AS(term(t, -1), Error);
}

TEST_CASE("construction rejects malformed sequences") {
  CHECK_THROWS_AS(CFiniteSeq({}, {}), Error);
  CHECK_THROWS_AS(CFiniteSeq({UPoly(1)}, {UPoly(1), UPoly(2)}), Error);
  CHECK_THROWS_AS(CFiniteSeq({UPoly(1), UPoly()}, {UPoly(1), UPoly(2)}), Error);
}

TEST_CASE("product of Chebyshev T with itself") {
  const CFiniteSeq t = chebyshev_t();
  const CFiniteSeq sq = product(t, t);
  CHECK(sq.order() <= 4);
  const auto oracle = pointwise_power(terms(t, 21), 2);
  CHECK(verify_annihilation(sq, oracle));
  CHECK(terms(sq, 21) == oracle);
}

TEST_CASE("product with the constant sequence reproduces the other factor") {
  const CFiniteSeq u = chebyshev_u();
  const CFiniteSeq p = product(constant_one(), u);
  CHECK(p.order() == u.order());
  CHECK(terms(p, 21) == terms(u, 21));
  CHECK(verify_annihilation(p, terms(u, 21)));
}

TEST_CASE("power") {
  const CFiniteSeq t = chebyshev_t();
  CHECK(terms(power(t, 1), 15) == terms(t, 15));
  CHECK(term(power(t, 2), 2) == pow(px("2*x^2-1"), 2));
  const CFiniteSeq cube = power(t, 3);
  CHECK(cube.order() <= 8);
  CHECK(verify_annihilation(cube, pointwise_power(terms(t, 31), 3)));
  const CFiniteSeq one = power(t, 0);
  CHECK(terms(one, 5) == std::vector<UPoly>(5, UPoly(1)));
}

TEST_CASE("reverse of Chebyshev T") {
  const CFiniteSeq r = reverse(chebyshev_t());
  CHECK(r.coeffs() == std::vector<UPoly>{UPoly(2), px("-x^2")});
  CHECK(r.init() == std::vector<UPoly>{UPoly(1), UPoly(1)});
  CHECK(term(r, 2) == px("2-x^2"));
  const auto tt = terms(chebyshev_t(), 7);
  const auto rt = terms(r, 7);
  for (int n = 0; n <= 6; ++n) CHECK(rt[static_cast<std::size_t>(n)] == reflect(tt[static_cast<std::size_t>(n)], n));
}

TEST_CASE("reverse rejects unsupported degree profiles") {
  const CFiniteSeq bad({px("x^2")}, {UPoly(1)});
  try {
    (void)reverse(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReverseUnsupportedDegreeProfile);
  }
  // Chebyshev U has q_1 = 2x of degree 1, but its reversal has q_1* = 2.
  CHECK_THROWS_AS(reverse(reverse(chebyshev_u())), Error);
}

TEST_CASE("verify_annihilation detects corruption") {
  const CFiniteSeq t = chebyshev_t();
  auto ts = terms(t, 10);
  CHECK(verify_annihilation(t, ts));
  ts[6] += UPoly(1);
  CHECK_FALSE(verify_annihilation(t, ts));
}

TEST_CASE("closure outputs annihilate directly computed terms") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const CFiniteSeq a = cfint::testing::random_cfinite(rng, 2, 1, 3);
    const CFiniteSeq b = cfint::testing::random_cfinite(rng, 2, 1, 3);
    const CFiniteSeq p = product(a, b);
    CHECK(p.order() <= a.order() * b.order());
    const int count = p.order() + 12;
    const auto ta = terms(a, std::max(count, 21));
    const auto tb = terms(b, std::max(count, 21));
    std::vector<UPoly> prod;
    for (std::size_t n = 0; n < ta.size(); ++n) prod.push_back(ta[n] * tb[n]);
    CHECK(verify_annihilation(p, prod));
    const auto tp = terms(p, 21);
    for (std::size_t n = 0; n < tp.size(); ++n) CHECK(tp[n] == prod[n]);

    if (trial % 4 == 0) {
      const CFiniteSeq sq = power(a, 2);
      CHECK(sq.order() <= a.order() * a.order());
      CHECK(verify_annihilation(sq, pointwise_power(terms(a, sq.order() + 12), 2)));
    }
  }
}

TEST_CASE("reverse is an involution where defined") {
  Rng rng(22);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const CFiniteSeq s = random_reversible(rng);
    const CFiniteSeq r = reverse(s);
    const auto ts = terms(s, 21);
    const auto tr = terms(r, 21);
    for (int n = 0; n <= 20; ++n) CHECK(tr[static_cast<std::size_t>(n)] == reflect(ts[static_cast<std::size_t>(n)], n));
    CHECK(verify_annihilation(r, tr));
    const CFiniteSeq rr = reverse(r);
    CHECK(terms(rr, 21) == ts);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("builtin sequences") {
  CHECK(builtin_sequence("chebyshev_T").has_value());
  CHECK(builtin_sequence("chebyshev_U")->init()[1] == px("2*x"));
  CHECK_FALSE(builtin_sequence("legendre").has_value());
}

TEST_CASE("characteristic polynomial of a companion matrix recovers the recurrence") {
  // Companion matrix of Chebyshev: [[2x, -1], [1, 0]] -> y^2 - 2x y + 1.
  const std::vector<std::vector<UPoly>> a{{px("2*x"), UPoly(-1)}, {UPoly(1), UPoly()}};
  const BPoly chi = characteristic_polynomial(a);
  CHECK(chi == BPoly(std::vector<UPoly>{UPoly(1), px("-2*x"), UPoly(1)}));
}
