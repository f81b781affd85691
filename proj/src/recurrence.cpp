#include "cfint/recurrence.hpp"

#include <algorithm>

namespace cfint {

namespace {

// (N + s)(N + s - 1) ... (N + s - b + 1) as a polynomial in N.
UPoly falling(int s, int b) {
  UPoly p(1);
  for (int j = 0; j < b; ++j) p *= UPoly(std::vector<Rational>{Rational(s - j), Rational(1)});
  return p;
}

Rational eval_at(const UPoly& p, long n) { return evaluate(p, Rational(n)); }

// Nonnegative integer roots, ascending.
std::vector<long> nonnegative_integer_roots(const UPoly& p) {
  std::vector<long> roots;
  if (p.degree() <= 0) return roots;
  mpz_class l = 1;
  for (int k = 0; k <= p.degree(); ++k) {
    const mpz_class d = p.coeff(k).denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> c;
  for (int k = 0; k <= p.degree(); ++k) c.push_back((p.coeff(k) * Rational(l)).numerator());
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (static_cast<int>(low) == p.degree()) return roots;

  // Cauchy bound on the magnitude of any root.
  mpz_class bound = 0;
  const mpz_class lead = abs(c.back());
  for (std::size_t k = low; k + 1 < c.size(); ++k) {
    const mpz_class q = abs(c[k]) / lead + 1;
    if (q > bound) bound = q;
  }
  bound += 1;
  if (!bound.fits_slong_p())
    throw Error(ErrorKind::InvalidInput, "coefficient too large for integer root search");
  const mpz_class& c_low = c[low];
  for (long k = 1; k <= bound.get_si(); ++k) {
    if (!mpz_divisible_ui_p(c_low.get_mpz_t(), static_cast<unsigned long>(k))) continue;
    mpz_class v = 0;
    for (std::size_t j = c.size(); j-- > 0;) v = v * k + c[j];
    if (v == 0) roots.push_back(k);
  }
  return roots;
}

std::vector<int> singular_indices(const UPoly& lead, int threshold) {
  std::vector<int> out;
  for (long r : nonnegative_integer_roots(lead))
    if (r >= threshold) out.push_back(static_cast<int>(r));
  return out;
}

}  // namespace

std::map<int, UPoly> shift_coefficients(const std::vector<UPoly>& opcoeffs) {
  std::map<int, UPoly> out;
  for (std::size_t b = 0; b < opcoeffs.size(); ++b) {
    const UPoly& ab = opcoeffs[b];
    for (int a = 0; a <= ab.degree(); ++a) {
      if (ab.coeff(a).is_zero()) continue;
      const int s = static_cast<int>(b) - a;
      out[s] += scale(falling(s, static_cast<int>(b)), ab.coeff(a));
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Recurrence make_recurrence(std::vector<UPoly> coeffs, int threshold) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw Error(ErrorKind::ZeroOperator, "all recurrence coefficients vanish");
  std::size_t low = 0;
  while (coeffs[low].is_zero()) ++low;
  if (low > 0) {
    // c_low(n) a(n+low) + ... becomes c_low(m-low) a(m) + ... for m = n + low.
    const UPoly back(std::vector<Rational>{Rational(-static_cast<long>(low)), Rational(1)});
    std::vector<UPoly> shifted;
    for (std::size_t i = low; i < coeffs.size(); ++i) shifted.push_back(compose(coeffs[i], back));
    coeffs = std::move(shifted);
    threshold += static_cast<int>(low);
  }

  UPoly g;
  for (const auto& c : coeffs) g = gcd(g, c);
  if (g.degree() > 0) {
    for (auto& c : coeffs) c = exact_div(c, g);
    // The reduced equation is not implied where g vanishes.
    for (long r : nonnegative_integer_roots(g))
      if (r >= threshold) threshold = static_cast<int>(r) + 1;
  }
  Rational k;
  for (const auto& c : coeffs) k = gcd(k, content(c));
  if (lead_rational(coeffs.back()).sign() < 0) k = -k;
  for (auto& c : coeffs) c = scale(c, Rational(1) / k);

  Recurrence rec;
  rec.order = static_cast<int>(coeffs.size()) - 1;
  rec.coeffs = std::move(coeffs);
  rec.threshold = threshold;
  rec.singular = singular_indices(rec.coeffs.back(), threshold);
  return rec;
}

Recurrence ode_to_recurrence(const std::vector<UPoly>& opcoeffs, const URatFunc& rhs) {
  if (std::all_of(opcoeffs.begin(), opcoeffs.end(), [](const UPoly& p) { return p.is_zero(); }))
    throw Error(ErrorKind::ZeroOperator, "the differential operator is zero");
  const UPoly& q = rhs.den();
  const UPoly& p = rhs.num();
  std::vector<UPoly> cleared;
  for (const auto& a : opcoeffs) cleared.push_back(a * q);

  const auto shifts = shift_coefficients(cleared);
  const int s_min = shifts.begin()->first;
  const int s_max = shifts.rbegin()->first;
  const UPoly back(std::vector<Rational>{Rational(-s_min), Rational(1)});
  std::vector<UPoly> coeffs;
  for (int s = s_min; s <= s_max; ++s) {
    const auto it = shifts.find(s);
    coeffs.push_back(it == shifts.end() ? UPoly() : compose(it->second, back));
  }
  const int n0 = std::max(0, s_min + std::max(0, p.degree() + 1));

  Recurrence rec = make_recurrence(std::move(coeffs), n0);

  // Equations of the series coefficients t^N that the homogeneous
  // recurrence does not cover: N + s_min < threshold.
  for (int big_n = 0; big_n + s_min < rec.threshold; ++big_n) {
    ExceptionalEquation eq;
    for (const auto& [s, c] : shifts) {
      const int k = big_n + s;
      if (k < 0) continue;
      const Rational v = eval_at(c, big_n);
      if (!v.is_zero()) eq.coeffs[k] = v;
    }
    eq.value = p.coeff(big_n);
    if (eq.coeffs.empty() && eq.value.is_zero()) continue;
    rec.exceptional.push_back(std::move(eq));
  }
  return rec;
}

int required_initials(const Recurrence& rec) {
  int need = rec.order + rec.threshold;
  if (!rec.singular.empty()) need = std::max(need, rec.singular.back() + rec.order + 1);
  return need;
}

bool annihilates(const Recurrence& rec, const std::vector<Rational>& terms) {
  const auto size = static_cast<long>(terms.size());
  for (long n = rec.threshold; n + rec.order < size; ++n) {
    Rational s;
    for (int i = 0; i <= rec.order; ++i) {
      const Rational& a = terms[static_cast<std::size_t>(n + i)];
      if (!a.is_zero()) s += eval_at(rec.coeffs[static_cast<std::size_t>(i)], n) * a;
    }
    if (!s.is_zero()) return false;
  }
  return true;
}

Recurrence attach_initials(Recurrence rec, const std::vector<Rational>& terms) {
  const int need = required_initials(rec);
  if (static_cast<int>(terms.size()) < need)
    throw Error(ErrorKind::InvalidInput, "need " + std::to_string(need) + " initial terms, got " +
                                             std::to_string(terms.size()));
  for (const auto& eq : rec.exceptional) {
    if (!eq.coeffs.empty() && eq.coeffs.rbegin()->first >= static_cast<int>(terms.size())) continue;
    Rational s;
    for (const auto& [k, c] : eq.coeffs) s += c * terms[static_cast<std::size_t>(k)];
    if (s != eq.value) throw Error(ErrorKind::RecurrenceRefuted, "initial terms violate a low-order equation");
  }
  if (!annihilates(rec, terms)) throw Error(ErrorKind::RecurrenceRefuted, "terms do not satisfy the recurrence");
  rec.initial_terms.assign(terms.begin(), terms.begin() + need);
  return rec;
}

std::vector<Rational> unroll(const Recurrence& rec, int count) {
  if (static_cast<int>(rec.initial_terms.size()) < required_initials(rec))
    throw Error(ErrorKind::InvalidInput, "initial terms are not attached");
  std::vector<Rational> a;
  for (int k = 0; k < count; ++k) {
    if (k < static_cast<int>(rec.initial_terms.size())) {
      a.push_back(rec.initial_terms[static_cast<std::size_t>(k)]);
      continue;
    }
    const long n = k - rec.order;
    const Rational lead = eval_at(rec.coeffs.back(), n);
    if (lead.is_zero())
      throw Error(ErrorKind::SingularLeadingCoefficient, "leading coefficient vanishes at n = " + std::to_string(n));
    Rational s;
    for (int i = 0; i < rec.order; ++i) s += eval_at(rec.coeffs[static_cast<std::size_t>(i)], n) * a[static_cast<std::size_t>(n + i)];
    a.push_back(-s / lead);
  }
  return a;
}

std::vector<BigFloat> unroll_numeric(const Recurrence& rec, const std::vector<BigFloat>& seeds, int count) {
  const auto need = static_cast<std::size_t>(required_initials(rec));
  if (seeds.size() < need) throw Error(ErrorKind::InvalidInput, "not enough numeric seeds");
  std::vector<BigFloat> a;
  for (int k = 0; k < count; ++k) {
    if (static_cast<std::size_t>(k) < need) {
      a.push_back(seeds[static_cast<std::size_t>(k)]);
      continue;
    }
    const long n = k - rec.order;
    const Rational lead = eval_at(rec.coeffs.back(), n);
    if (lead.is_zero())
      throw Error(ErrorKind::SingularLeadingCoefficient, "leading coefficient vanishes at n = " + std::to_string(n));
    BigFloat s = 0;
    for (int i = 0; i < rec.order; ++i)
      s += to_big(eval_at(rec.coeffs[static_cast<std::size_t>(i)], n)) * a[static_cast<std::size_t>(n + i)];
    a.push_back(-s / to_big(lead));
  }
  return a;
}

BigFloat max_residual(const Recurrence& rec, const std::vector<BigFloat>& terms) {
  BigFloat worst = 0;
  const auto size = static_cast<long>(terms.size());
  for (long n = rec.threshold; n + rec.order < size; ++n) {
    BigFloat s = 0;
    BigFloat scale_sum = 0;
    for (int i = 0; i <= rec.order; ++i) {
      const BigFloat v = to_big(eval_at(rec.coeffs[static_cast<std::size_t>(i)], n)) * terms[static_cast<std::size_t>(n + i)];
      s += v;
      scale_sum += abs(v);
    }
    worst = std::max(worst, BigFloat(abs(s) / std::max(BigFloat(1), scale_sum)));
  }
  for (const auto& eq : rec.exceptional) {
    if (!eq.coeffs.empty() && eq.coeffs.rbegin()->first >= size) continue;
    BigFloat s = -to_big(eq.value);
    BigFloat scale_sum = abs(s);
    for (const auto& [k, c] : eq.coeffs) {
      const BigFloat v = to_big(c) * terms[static_cast<std::size_t>(k)];
      s += v;
      scale_sum += abs(v);
    }
    worst = std::max(worst, BigFloat(abs(s) / std::max(BigFloat(1), scale_sum)));
  }
  return worst;
}

}  // namespace cfint
