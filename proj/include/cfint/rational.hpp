#pragma once

// Arbitrary-precision rationals backed by GMP. mpq_class keeps values in
// canonical form (coprime, positive denominator, zero as 0/1).

#include <gmpxx.h>

#include <concepts>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "cfint/errors.hpp"

namespace cfint {

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(mpz_class v) : v_(std::move(v)) {}

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "a" or "a/b" with an optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// gcd over Q as used for polynomial content: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d).
// Dividing a polynomial by the gcd of its coefficients leaves a primitive
// integer polynomial. gcd(0, 0) = 0.
Rational gcd(const Rational& a, const Rational& b);

Rational pow(const Rational& base, unsigned exponent);

// Leading "rational" coefficient; for a scalar that is the value itself.
inline const Rational& lead_rational(const Rational& r) { return r; }
inline Rational scale(const Rational& r, const Rational& s) { return r * s; }

}  // namespace cfint
