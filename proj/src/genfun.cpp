#include "cfint/genfun.hpp"

namespace cfint {

BivariateGF::BivariateGF(BRatFunc value) : value_(std::move(value)) {
  if (value_.den().coeff(0).is_zero())
    throw Error(ErrorKind::NotExpandable, "generating function denominator vanishes at t = 0");
}

BivariateGF generating_function(const CFiniteSeq& seq) {
  const auto order = static_cast<std::size_t>(seq.order());
  const auto p = terms(seq, seq.order());

  std::vector<UPoly> den(order + 1);
  den[0] = UPoly(1);
  for (std::size_t i = 1; i <= order; ++i) den[i] = -seq.coeffs()[i - 1];

  std::vector<UPoly> num(order);
  for (std::size_t n = 0; n < order; ++n) {
    UPoly c = p[n];
    for (std::size_t i = 1; i <= n; ++i) c -= seq.coeffs()[i - 1] * p[n - i];
    num[n] = std::move(c);
  }
  return BivariateGF(BRatFunc(BPoly(std::move(num)), BPoly(std::move(den))));
}

std::vector<UPoly> taylor_coeffs(const BRatFunc& f, int count) {
  const BPoly& num = f.num();
  const BPoly& den = f.den();
  const UPoly d0 = den.coeff(0);
  if (d0.is_zero()) throw Error(ErrorKind::NotExpandable, "denominator vanishes at t = 0");
  std::vector<UPoly> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 0; n < count; ++n) {
    UPoly c = num.coeff(n);
    for (int k = 1; k <= std::min(n, den.degree()); ++k)
      c -= den[static_cast<std::size_t>(k)] * out[static_cast<std::size_t>(n - k)];
    try {
      out.push_back(exact_div(c, d0));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotExactDivision) throw;
      throw Error(ErrorKind::NotExpandable, "Taylor coefficient is not a polynomial in x");
    }
  }
  return out;
}

}  // namespace cfint
