#pragma once

// C-finite polynomial sequences
//
//   P_n(x) = p_1(x) P_{n-1}(x) + ... + p_L(x) P_{n-L}(x),   n >= L,
//
// with initial polynomials P_0 = q_0, ..., P_{L-1} = q_{L-1}, and the
// closure operations product, power and reverse.

#include <optional>
#include <string>
#include <vector>

#include "cfint/poly.hpp"

namespace cfint {

class CFiniteSeq {
 public:
  // Throws InvalidInput unless coeffs and init are non-empty, of equal
  // length, and the last coefficient is nonzero.
  CFiniteSeq(std::vector<UPoly> coeffs, std::vector<UPoly> init);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<UPoly>& coeffs() const { return coeffs_; }
  const std::vector<UPoly>& init() const { return init_; }

  friend bool operator==(const CFiniteSeq&, const CFiniteSeq&) = default;

 private:
  std::vector<UPoly> coeffs_;
  std::vector<UPoly> init_;
};

UPoly term(const CFiniteSeq& seq, int n);

// P_0, ..., P_{count-1}.
std::vector<UPoly> terms(const CFiniteSeq& seq, int count);

// Terms of the result are term(a, n) * term(b, n). The recurrence is the
// characteristic polynomial of the Kronecker product of the two companion
// matrices, so order(result) = order(a) * order(b).
CFiniteSeq product(const CFiniteSeq& a, const CFiniteSeq& b);

// Iterated product; power(seq, 0) is the constant sequence 1.
CFiniteSeq power(const CFiniteSeq& seq, unsigned r);

// x^n P_n(1/x). Requires deg p_i <= i and deg q_j = j, otherwise throws
// ReverseUnsupportedDegreeProfile.
CFiniteSeq reverse(const CFiniteSeq& seq);

bool verify_annihilation(const CFiniteSeq& seq, const std::vector<UPoly>& terms);

// Characteristic polynomial det(y I - A) of a square matrix with entries in
// Q[x], returned with y as the outer variable.
BPoly characteristic_polynomial(const std::vector<std::vector<UPoly>>& a);

CFiniteSeq chebyshev_t();
CFiniteSeq chebyshev_u();
CFiniteSeq constant_one();

// "chebyshev_T", "chebyshev_U" or "constant_one".
std::optional<CFiniteSeq> builtin_sequence(const std::string& name);

}  // namespace cfint
