#include "cfint/cfinite.hpp"

#include "cfint/linalg.hpp"

namespace cfint {

CFiniteSeq::CFiniteSeq(std::vector<UPoly> coeffs, std::vector<UPoly> init)
    : coeffs_(std::move(coeffs)), init_(std::move(init)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidInput, "C-finite sequence needs order >= 1");
  if (coeffs_.size() != init_.size())
    throw Error(ErrorKind::InvalidInput, "C-finite sequence needs as many initial polynomials as coefficients");
  if (coeffs_.back().is_zero())
    throw Error(ErrorKind::InvalidInput, "last recurrence coefficient must be nonzero");
}

std::vector<UPoly> terms(const CFiniteSeq& seq, int count) {
  std::vector<UPoly> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  const int order = seq.order();
  for (int n = 0; n < count; ++n) {
    if (n < order) {
      out.push_back(seq.init()[static_cast<std::size_t>(n)]);
      continue;
    }
    UPoly next;
    for (int i = 1; i <= order; ++i)
      next += seq.coeffs()[static_cast<std::size_t>(i - 1)] * out[static_cast<std::size_t>(n - i)];
    out.push_back(std::move(next));
  }
  return out;
}

UPoly term(const CFiniteSeq& seq, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "term index must be nonnegative");
  return terms(seq, n + 1).back();
}

BPoly characteristic_polynomial(const std::vector<std::vector<UPoly>>& a) {
  const std::size_t m = a.size();
  Matrix<BPoly> shifted(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      BPoly e = from_inner(-a[i][j]);
      if (i == j) e += BPoly::variable();
      shifted(i, j) = std::move(e);
    }
  }
  return determinant(shifted);
}

namespace {

std::vector<std::vector<UPoly>> companion(const CFiniteSeq& s) {
  const auto l = static_cast<std::size_t>(s.order());
  std::vector<std::vector<UPoly>> a(l, std::vector<UPoly>(l));
  for (std::size_t j = 0; j < l; ++j) a[0][j] = s.coeffs()[j];
  for (std::size_t i = 1; i < l; ++i) a[i][i - 1] = UPoly(1);
  return a;
}

std::vector<std::vector<UPoly>> kronecker(const std::vector<std::vector<UPoly>>& a,
                                          const std::vector<std::vector<UPoly>>& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<std::vector<UPoly>> k(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c)
          k[i * b.size() + r][j * b.size() + c] = a[i][j] * b[r][c];
    }
  return k;
}

}  // namespace

CFiniteSeq product(const CFiniteSeq& a, const CFiniteSeq& b) {
  const BPoly chi = characteristic_polynomial(kronecker(companion(a), companion(b)));
  const int order = chi.degree();
  // chi = y^M - c_1 y^(M-1) - ... - c_M, so c_i = -chi[M - i].
  std::vector<UPoly> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order));
  for (int i = 1; i <= order; ++i) coeffs.push_back(-chi[static_cast<std::size_t>(order - i)]);
  const auto ta = terms(a, order);
  const auto tb = terms(b, order);
  std::vector<UPoly> init;
  init.reserve(static_cast<std::size_t>(order));
  for (int n = 0; n < order; ++n) init.push_back(ta[static_cast<std::size_t>(n)] * tb[static_cast<std::size_t>(n)]);
  return CFiniteSeq(std::move(coeffs), std::move(init));
}

CFiniteSeq power(const CFiniteSeq& seq, unsigned r) {
  if (r == 0) return constant_one();
  CFiniteSeq out = seq;
  for (unsigned k = 1; k < r; ++k) out = product(out, seq);
  return out;
}

CFiniteSeq reverse(const CFiniteSeq& seq) {
  std::vector<UPoly> coeffs;
  std::vector<UPoly> init;
  for (int i = 1; i <= seq.order(); ++i) {
    const UPoly& p = seq.coeffs()[static_cast<std::size_t>(i - 1)];
    if (p.degree() > i)
      throw Error(ErrorKind::ReverseUnsupportedDegreeProfile,
                  "coefficient p_" + std::to_string(i) + " has degree " + std::to_string(p.degree()) + " > " +
                      std::to_string(i));
    coeffs.push_back(reversed(p, i));
  }
  for (int j = 0; j < seq.order(); ++j) {
    const UPoly& q = seq.init()[static_cast<std::size_t>(j)];
    if (q.degree() != j)
      throw Error(ErrorKind::ReverseUnsupportedDegreeProfile,
                  "initial polynomial q_" + std::to_string(j) + " has degree " + std::to_string(q.degree()) +
                      " != " + std::to_string(j));
    init.push_back(reversed(q, j));
  }
  return CFiniteSeq(std::move(coeffs), std::move(init));
}

bool verify_annihilation(const CFiniteSeq& seq, const std::vector<UPoly>& terms) {
  const auto order = static_cast<std::size_t>(seq.order());
  for (std::size_t n = order; n < terms.size(); ++n) {
    UPoly rhs;
    for (std::size_t i = 1; i <= order; ++i) rhs += seq.coeffs()[i - 1] * terms[n - i];
    if (!(rhs == terms[n])) return false;
  }
  return true;
}

CFiniteSeq chebyshev_t() {
  return CFiniteSeq({UPoly::monomial(Rational(2), 1), UPoly(-1)}, {UPoly(1), UPoly::variable()});
}

CFiniteSeq chebyshev_u() {
  return CFiniteSeq({UPoly::monomial(Rational(2), 1), UPoly(-1)}, {UPoly(1), UPoly::monomial(Rational(2), 1)});
}

CFiniteSeq constant_one() { return CFiniteSeq({UPoly(1)}, {UPoly(1)}); }

std::optional<CFiniteSeq> builtin_sequence(const std::string& name) {
  if (name == "chebyshev_T") return chebyshev_t();
  if (name == "chebyshev_U") return chebyshev_u();
  if (name == "constant_one") return constant_one();
  return std::nullopt;
}

}  // namespace cfint
