#include "cfint/format.hpp"

#include <vector>

namespace cfint {

namespace {

struct Term {
  Rational coeff;
  std::string monomial;  // empty for constants
};

std::string power_of(Var v, int k) {
  if (k == 0) return {};
  std::string s(1, var_name(v));
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

std::string join_monomial(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

std::string render(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& term : terms) {
    std::string piece;
    if (term.monomial.empty()) {
      piece = term.coeff.to_string();
    } else if (term.coeff.is_one()) {
      piece = term.monomial;
    } else if (term.coeff == Rational(-1)) {
      piece = "-" + term.monomial;
    } else {
      piece = term.coeff.to_string() + "*" + term.monomial;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += piece;
    } else {
      out += "+" + piece;
    }
  }
  return out;
}

bool descending(Var v) { return v != Var::t; }

void collect(const UPoly& p, Var v, const std::string& suffix, std::vector<Term>& out) {
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) {
    const int k = descending(v) ? d - i : i;
    const Rational& c = p[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    out.push_back({c, join_monomial(power_of(v, k), suffix)});
  }
}

std::vector<Term> terms_of(const BPoly& p, Var inner, Var outer) {
  std::vector<Term> out;
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) {
    const int k = descending(outer) ? d - i : i;
    collect(p[static_cast<std::size_t>(k)], inner, power_of(outer, k), out);
  }
  return out;
}

std::string fraction(const std::string& num, std::size_t num_terms, const std::string& den) {
  const std::string n = num_terms > 1 ? "(" + num + ")" : num;
  return n + "/(" + den + ")";
}

}  // namespace

std::string format(const UPoly& p, Var v) {
  std::vector<Term> terms;
  collect(p, v, {}, terms);
  return render(terms);
}

std::string format(const BPoly& p, Var inner, Var outer) { return render(terms_of(p, inner, outer)); }

std::string format(const URatFunc& f, Var v) {
  if (f.is_polynomial()) return format(f.num(), v);
  std::vector<Term> num;
  collect(f.num(), v, {}, num);
  return fraction(render(num), num.size(), format(f.den(), v));
}

std::string format(const BRatFunc& f, Var inner, Var outer) {
  if (f.is_polynomial() && f.den()[0].degree() == 0) return format(f.num(), inner, outer);
  const auto num = terms_of(f.num(), inner, outer);
  return fraction(render(num), num.size(), format(f.den(), inner, outer));
}

}  // namespace cfint
