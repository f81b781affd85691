#pragma once

// Normalized fractions of polynomials: gcd(num, den) = 1 and the leading
// rational coefficient of den is 1, so equal values are structurally equal.

#include <utility>

#include "cfint/poly.hpp"

namespace cfint {

enum class Var { x, t, n };

inline char var_name(Var v) {
  switch (v) {
    case Var::x: return 'x';
    case Var::t: return 't';
    case Var::n: return 'n';
  }
  return '?';
}

template <class P>
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(P p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I>
  RatFunc(I v) : RatFunc(P(v)) {}  // NOLINT(google-explicit-constructor)

  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize_in_place(); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { return from_normalized(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Caller guarantees the pair is already in canonical form.
  static RatFunc from_normalized(P num, P den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

 private:
  void normalize_in_place() {
    if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = P(1);
      return;
    }
    const P g = gcd(num_, den_);
    if (g.degree() > 0 || !(g == P(1))) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const Rational lr = lead_rational(den_);
    if (!lr.is_one()) {
      const Rational inv = Rational(1) / lr;
      num_ = scale(num_, inv);
      den_ = scale(den_, inv);
    }
  }

  P num_;
  P den_;
};

using URatFunc = RatFunc<UPoly>;
using BRatFunc = RatFunc<BPoly>;

template <class P>
RatFunc<P> normalize(P num, P den) {
  return RatFunc<P>(std::move(num), std::move(den));
}

template <class P>
bool is_zero(const RatFunc<P>& f) {
  return f.is_zero();
}

template <class P>
RatFunc<P> pow(const RatFunc<P>& f, unsigned e) {
  return RatFunc<P>::from_normalized(pow(f.num(), e), pow(f.den(), e));
}

inline URatFunc derivative(const URatFunc& f) {
  const UPoly& n = f.num();
  const UPoly& d = f.den();
  return URatFunc(derivative(n) * d - n * derivative(d), d * d);
}

// Quotient rule in the chosen variable of an (outer t, inner x) fraction.
inline BRatFunc derivative(const BRatFunc& f, Var v) {
  const BPoly& n = f.num();
  const BPoly& d = f.den();
  if (v == Var::t) return BRatFunc(derivative(n) * d - n * derivative(d), d * d);
  return BRatFunc(derivative_inner(n) * d - n * derivative_inner(d), d * d);
}

inline URatFunc evaluate_inner(const BRatFunc& f, const Rational& at) {
  UPoly den = evaluate_inner(f.den(), at);
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator vanishes at the evaluation point");
  return URatFunc(evaluate_inner(f.num(), at), std::move(den));
}

inline Rational evaluate(const URatFunc& f, const Rational& at) {
  const Rational d = evaluate(f.den(), at);
  if (d.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator vanishes at the evaluation point");
  return evaluate(f.num(), at) / d;
}

inline BRatFunc from_inner(const URatFunc& f) {
  return BRatFunc::from_normalized(from_inner(f.num()), from_inner(f.den()));
}

inline BRatFunc from_outer(const URatFunc& f) {
  return BRatFunc::from_normalized(from_outer(f.num()), from_outer(f.den()));
}

}  // namespace cfint
