#include "cfint/linalg.hpp"

namespace cfint {

std::vector<std::vector<Rational>> nullspace_rational(const Matrix<Rational>& a, Exec exec) {
  Matrix<Rational> cleared = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const mpz_class d = a(r, c).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (l == 1) continue;
    const Rational factor(l);
    for (std::size_t c = 0; c < a.cols(); ++c) cleared(r, c) *= factor;
  }
  return nullspace(cleared, exec);
}

std::vector<std::vector<UPoly>> nullspace_ratfunc(const Matrix<URatFunc>& a, Exec exec) {
  Matrix<UPoly> cleared(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    UPoly l(1);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const UPoly& d = a(r, c).den();
      l = exact_div(l * d, gcd(l, d));
    }
    for (std::size_t c = 0; c < a.cols(); ++c)
      cleared(r, c) = a(r, c).num() * exact_div(l, a(r, c).den());
  }
  return nullspace(cleared, exec);
}

}  // namespace cfint
