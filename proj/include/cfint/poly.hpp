#pragma once

// Dense univariate polynomials over a coefficient ring R, lowest degree first.
//
//   UPoly = Poly<Rational>         polynomials in one of x, t, n
//   BPoly = Poly<UPoly>            bivariate; by convention outer t, inner x
//
// A Poly carries no variable name; names are supplied when formatting or
// parsing. The coefficient ring must provide is_zero, exact_div, gcd (unit
// normalized content), lead_rational and scale(r, Rational) as free
// functions found by ADL.

#include <algorithm>
#include <concepts>
#include <utility>
#include <vector>

#include "cfint/errors.hpp"
#include "cfint/rational.hpp"

namespace cfint {

template <class R>
class Poly;
template <class R>
bool is_zero(const Poly<R>& p);

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;

  Poly(R c) {  // NOLINT(google-explicit-constructor)
    if (!coeff_is_zero(c)) c_.push_back(std::move(c));
  }

  template <std::integral I>
  Poly(I v) : Poly(R(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(R c, int k) {
    if (coeff_is_zero(c)) return {};
    std::vector<R> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
  }

  static Poly variable() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  // Out-of-range indices read as zero.
  R coeff(int k) const {
    if (k < 0 || k > degree()) return R();
    return c_[static_cast<std::size_t>(k)];
  }
  const R& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& lead() const { return c_.back(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend Poly operator*(Poly a, const R& s) {
    if (coeff_is_zero(s)) return {};
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  friend Poly operator*(const R& s, Poly a) { return std::move(a) * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Multiply by x^k.
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<R> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<Out> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Poly<Out>(std::move(v));
  }

 private:
  static bool coeff_is_zero(const R& r) { return cfint::is_zero(r); }

  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

using UPoly = Poly<Rational>;
using BPoly = Poly<UPoly>;

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
Rational lead_rational(const Poly<R>& p) {
  if (p.is_zero()) return Rational(0);
  return Rational(lead_rational(p.lead()));
}

template <class R>
Poly<R> scale(const Poly<R>& p, const Rational& s) {
  return p.map([&](const R& c) { return R(scale(c, s)); });
}

// Scales p so that its leading rational coefficient is 1 (zero stays zero).
template <class R>
Poly<R> unit_normal(const Poly<R>& p) {
  if (p.is_zero()) return p;
  const Rational lr = lead_rational(p);
  if (lr.is_one()) return p;
  return scale(p, Rational(1) / lr);
}

template <class R>
Poly<R> pow(const Poly<R>& base, unsigned e) {
  Poly<R> result(R(1));
  Poly<R> b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
  if (p.degree() < 1) return {};
  std::vector<R> v;
  v.reserve(p.size() - 1);
  for (int k = 1; k <= p.degree(); ++k) v.push_back(p[static_cast<std::size_t>(k)] * R(k));
  return Poly<R>(std::move(v));
}

template <class R>
R evaluate(const Poly<R>& p, const R& at) {
  R acc{};
  for (int k = p.degree(); k >= 0; --k) acc = acc * at + p[static_cast<std::size_t>(k)];
  return acc;
}

// Composition p(q).
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + Poly<R>(p[static_cast<std::size_t>(k)]);
  return acc;
}

// Divides every coefficient exactly by s.
template <class R>
Poly<R> divide_coeffs(const Poly<R>& p, const R& s) {
  return p.map([&](const R& c) { return R(exact_div(c, s)); });
}

// Quotient and remainder over a field (R = Rational).
inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv = Rational(1) / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] * inv;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

// Exact quotient a / b over an integral domain; throws NotExactDivision when
// b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::NotExactDivision, "degree too small");
  std::vector<R> rem = a.coeffs();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const R& top = rem[static_cast<std::size_t>(k + b.degree())];
    if (is_zero(top)) continue;
    R q = exact_div(top, b.lead());
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem)
    if (!is_zero(r)) throw Error(ErrorKind::NotExactDivision, "nonzero remainder");
  return Poly<R>(std::move(quo));
}

template <class R>
bool divides(const Poly<R>& b, const Poly<R>& a) {
  try {
    (void)exact_div(a, b);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotExactDivision) throw;
    return false;
  }
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without division.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<R> rem = a.coeffs();
  const R& lb = b.lead();
  int steps = a.degree() - b.degree() + 1;
  for (int top = a.degree(); top >= b.degree(); --top) {
    const R t = rem[static_cast<std::size_t>(top)];
    for (auto& r : rem) r *= lb;
    const int shift = top - b.degree();
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(shift + j)] -= t * b[static_cast<std::size_t>(j)];
    --steps;
  }
  for (; steps > 0; --steps)
    for (auto& r : rem) r *= lb;
  return Poly<R>(std::move(rem));
}

template <class R>
R content(const Poly<R>& p) {
  R g{};
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
  }
  return g;
}

template <class R>
Poly<R> primitive_part(const Poly<R>& p) {
  if (p.is_zero()) return p;
  return divide_coeffs(p, content(p));
}

// Subresultant PRS gcd over R[v]; result is unit normalized so that its
// leading rational coefficient is 1. gcd(a, 0) = unit_normal(a).
template <class R>
Poly<R> gcd(const Poly<R>& a0, const Poly<R>& b0) {
  if (b0.is_zero()) return unit_normal(a0);
  if (a0.is_zero()) return unit_normal(b0);
  Poly<R> a = a0.degree() >= b0.degree() ? a0 : b0;
  Poly<R> b = a0.degree() >= b0.degree() ? b0 : a0;
  const R ca = content(a);
  const R cb = content(b);
  const R d = gcd(ca, cb);
  a = divide_coeffs(a, ca);
  b = divide_coeffs(b, cb);
  if (b.degree() == 0) return unit_normal(Poly<R>(d));
  R g(1);
  R h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    Poly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = Poly<R>(R(1));
      break;
    }
    R divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    a = std::move(b);
    b = divide_coeffs(r, divisor);
    g = a.lead();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      R num = g;
      R den = h;
      for (int i = 1; i < delta; ++i) num *= g;
      for (int i = 2; i < delta; ++i) den *= h;
      h = exact_div(num, den);
    }
  }
  return unit_normal(primitive_part(b) * d);
}

// Multiplicity of the root `at` (a value of the coefficient ring) in p; the
// zero polynomial reports -1.
template <class R>
int root_multiplicity(Poly<R> p, const R& at) {
  if (p.is_zero()) return -1;
  int m = 0;
  const Poly<R> lin(std::vector<R>{-at, R(1)});
  while (p.degree() >= 1 && is_zero(evaluate(p, at))) {
    p = exact_div(p, lin);
    ++m;
  }
  return m;
}

// Reverses the coefficient list padded to `width` + 1 entries: x^width p(1/x).
template <class R>
Poly<R> reversed(const Poly<R>& p, int width) {
  std::vector<R> v(static_cast<std::size_t>(width) + 1);
  for (int k = 0; k <= p.degree(); ++k)
    v[static_cast<std::size_t>(width - k)] = p[static_cast<std::size_t>(k)];
  return Poly<R>(std::move(v));
}

// ---- bivariate helpers (BPoly: outer t, inner x) ----

// d/d(inner).
inline BPoly derivative_inner(const BPoly& p) {
  return p.map([](const UPoly& c) { return derivative(c); });
}

// Substitute a value for the inner variable, leaving a polynomial in the outer one.
inline UPoly evaluate_inner(const BPoly& p, const Rational& at) {
  return p.map([&](const UPoly& c) { return evaluate(c, at); });
}

// Exchange the roles of the two variables.
BPoly swap_variables(const BPoly& p);

// Embed a polynomial in the inner variable (constant in the outer one).
inline BPoly from_inner(const UPoly& p) { return BPoly(p); }

// Embed a polynomial in the outer variable.
inline BPoly from_outer(const UPoly& p) {
  return p.map([](const Rational& c) { return UPoly(c); });
}

int inner_degree(const BPoly& p);

// Largest m with (x - at)^m dividing p identically in the outer variable.
int inner_root_multiplicity(const BPoly& p, const Rational& at);

}  // namespace cfint
