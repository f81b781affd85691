#include "cfint/telescoper.hpp"

#include <stdexcept>

namespace cfint {

namespace {

// Polynomials in this file are either in the usual (t outer, x inner) view
// or in the swapped (x outer, t inner) view; the latter is suffixed _x.

struct Integrand {
  BPoly num;  // R * prefactor = num / den
  BPoly den;
  UPoly u;    // rho = u / v
  UPoly v;
};

Integrand prepare(const BivariateGF& gf, const Kernel& kernel) {
  const BRatFunc r = gf.value() * from_inner(kernel.prefactor);
  return {r.num(), r.den(), kernel.logderiv.num(), kernel.logderiv.den()};
}

int degree_of(const BPoly& p_x) { return p_x.degree(); }

// M_0 = num, M_{i+1} = den M_i' - (i+1) M_i den', so D_t^i (num/den) = M_i / den^(i+1).
std::vector<BPoly> t_derivative_numerators(const BPoly& num, const BPoly& den, int order) {
  std::vector<BPoly> m{num};
  const BPoly dden = derivative(den);
  for (int i = 0; i < order; ++i)
    m.push_back(den * derivative(m.back()) - scale(m.back() * dden, Rational(i + 1)));
  return m;
}

// Upper bound for deg_x W in A W' + B W = S, or -1 if only W = 0 fits.
int degree_bound(const BPoly& a_x, const BPoly& b_x, int deg_s) {
  const int da = degree_of(a_x);
  const int db = b_x.is_zero() ? -1 : degree_of(b_x);
  int bound;
  if (db > da - 1) {
    bound = deg_s - db;
  } else if (db < da - 1 || b_x.is_zero()) {
    bound = deg_s - da + 1;
  } else {
    bound = deg_s - db;
    const URatFunc k(-b_x.lead(), a_x.lead());
    if (k.is_polynomial() && k.num().degree() <= 0) {
      const Rational c = k.num().coeff(0);
      if (c.is_integer() && c.sign() >= 0) bound = std::max(bound, static_cast<int>(c.numerator().get_si()));
    }
  }
  return std::max(bound, -1);
}

// Reduced row echelon form of the rows over Q(t).
std::vector<std::vector<URatFunc>> rref(std::vector<std::vector<URatFunc>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const URatFunc inv = URatFunc(1) / rows[r][c];
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const URatFunc f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

UPoly lcm(const UPoly& a, const UPoly& b) { return exact_div(a * b, gcd(a, b)); }

std::optional<Telescoper> solve_ansatz(const Integrand& f, int order, int e, Exec exec) {
  const BPoly den_x = swap_variables(f.den);
  const BPoly dden_x = derivative(den_x);
  BPoly g_x(UPoly(1));
  if (degree_of(den_x) > 0) g_x = primitive_part(gcd(den_x, dden_x));
  const BPoly dg_x = derivative(g_x);
  const BPoly v_x = from_outer(f.v);
  const BPoly u_x = from_outer(f.u);
  const BPoly dv_x = derivative(v_x);

  const BPoly a_x = den_x * v_x;
  const BPoly b_x = u_x * den_x - scale(dden_x * v_x, Rational(order)) - exact_div(den_x, g_x) * dg_x * v_x -
                    scale(dv_x * den_x, Rational(e));

  const auto m = t_derivative_numerators(f.num, f.den, order);
  const BPoly gv = g_x * pow(v_x, static_cast<unsigned>(e + 1));
  std::vector<BPoly> s_x;
  int deg_s = -1;
  for (int i = 0; i <= order; ++i) {
    s_x.push_back(gv * swap_variables(m[static_cast<std::size_t>(i)]) *
                  pow(den_x, static_cast<unsigned>(order - i)));
    deg_s = std::max(deg_s, s_x.back().degree());
  }

  const int kmax = degree_bound(a_x, b_x, deg_s);
  const auto nw = static_cast<std::size_t>(kmax + 1);
  const auto na = static_cast<std::size_t>(order + 1);

  // Columns: w_0 .. w_kmax, then a_0 .. a_order.
  std::vector<BPoly> columns;
  for (int k = 0; k <= kmax; ++k) {
    const BPoly xk = BPoly::monomial(UPoly(1), k);
    BPoly col = b_x * xk;
    if (k > 0) col += scale(a_x * BPoly::monomial(UPoly(1), k - 1), Rational(k));
    columns.push_back(std::move(col));
  }
  for (const auto& s : s_x) columns.push_back(-s);

  int rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.degree() + 1);
  Matrix<UPoly> mat(static_cast<std::size_t>(rows), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (int r = 0; r <= columns[j].degree(); ++r) mat(static_cast<std::size_t>(r), j) = columns[j].coeff(r);

  const auto basis = nullspace(mat, exec);

  // Canonical representative: reduced echelon form with columns ordered
  // a_order .. a_0, w_kmax .. w_0; take the first row pivoting on an a.
  std::vector<std::vector<URatFunc>> reordered;
  for (const auto& vec : basis) {
    std::vector<URatFunc> row;
    for (std::size_t i = na; i-- > 0;) row.emplace_back(vec[nw + i]);
    for (std::size_t k = nw; k-- > 0;) row.emplace_back(vec[k]);
    reordered.push_back(std::move(row));
  }
  const auto reduced = rref(std::move(reordered));
  const std::vector<URatFunc>* chosen = nullptr;
  for (const auto& row : reduced) {
    bool a_nonzero = false;
    for (std::size_t i = 0; i < na; ++i) a_nonzero = a_nonzero || !row[i].is_zero();
    if (a_nonzero) {
      chosen = &row;
      break;
    }
  }
  if (chosen == nullptr) return std::nullopt;

  UPoly common(1);
  for (std::size_t i = 0; i < na; ++i) common = lcm(common, (*chosen)[i].den());
  std::vector<UPoly> a(na);
  for (std::size_t i = 0; i < na; ++i) {
    const URatFunc& c = (*chosen)[na - 1 - i];
    a[i] = c.num() * exact_div(common, c.den());
  }
  UPoly cont;
  for (const auto& p : a) cont = gcd(cont, p);
  Rational num_content;
  for (auto& p : a) {
    p = exact_div(p, cont);
    num_content = gcd(num_content, content(p));
  }
  std::size_t top = na;
  while (top > 0 && a[top - 1].is_zero()) --top;
  a.resize(top);
  if (lead_rational(a.back()).sign() < 0) num_content = -num_content;
  for (auto& p : a) p = scale(p, Rational(1) / num_content);

  // The row above was scaled by lambda = common / (cont * num_content).
  const URatFunc lambda = URatFunc(scale(common, Rational(1) / num_content), cont);
  std::vector<URatFunc> w(nw);
  for (std::size_t k = 0; k < nw; ++k) w[k] = (*chosen)[na + nw - 1 - k] * lambda;

  UPoly wden(1);
  for (const auto& c : w) wden = lcm(wden, c.den());
  std::vector<UPoly> wcoef;
  for (const auto& c : w) wcoef.push_back(c.num() * exact_div(wden, c.den()));
  const BPoly w_t = swap_variables(BPoly(std::move(wcoef)));

  const BPoly e_x = pow(den_x, static_cast<unsigned>(order)) * g_x * pow(v_x, static_cast<unsigned>(e));
  const BRatFunc q(w_t, swap_variables(e_x) * from_outer(wden));
  const BRatFunc y = q / BRatFunc(f.num, f.den);

  Telescoper tel;
  tel.order = static_cast<int>(a.size()) - 1;
  tel.opcoeffs = std::move(a);
  tel.certificate = y;
  return tel;
}

}  // namespace

std::optional<Telescoper> telescope_at_order(const BivariateGF& gf, const Kernel& kernel, int order, Exec exec) {
  if (order < 0) throw Error(ErrorKind::InvalidInput, "negative telescoper order");
  if (gf.value().is_zero()) return Telescoper{0, {UPoly(1)}, BRatFunc()};
  const Integrand f = prepare(gf, kernel);
  const int max_e = f.v.degree() > 0 ? 3 : 0;
  for (int e = 0; e <= max_e; ++e) {
    auto tel = solve_ansatz(f, order, e, exec);
    if (!tel) continue;
    if (!verify_certificate(gf, kernel, *tel))
      throw std::logic_error("telescoper certificate failed verification at order " + std::to_string(order));
    return tel;
  }
  return std::nullopt;
}

Telescoper telescope(const BivariateGF& gf, const Kernel& kernel, int max_order, Exec exec) {
  for (int order = 0; order <= max_order; ++order)
    if (auto tel = telescope_at_order(gf, kernel, order, exec)) return *tel;
  throw Error(ErrorKind::NoTelescoperFound, "no telescoper of order <= " + std::to_string(max_order));
}

namespace {

// Unreduced fraction; the identity check never needs a gcd.
struct Frac {
  BPoly n;
  BPoly d;
};

Frac add(const Frac& a, const Frac& b) {
  if (a.d == b.d) return {a.n + b.n, a.d};
  return {a.n * b.d + b.n * a.d, a.d * b.d};
}

Frac mul(const Frac& a, const Frac& b) { return {a.n * b.n, a.d * b.d}; }

Frac d_t(const Frac& f) { return {derivative(f.n) * f.d - f.n * derivative(f.d), f.d * f.d}; }

Frac d_x(const Frac& f) { return {derivative_inner(f.n) * f.d - f.n * derivative_inner(f.d), f.d * f.d}; }

}  // namespace

bool verify_certificate(const BivariateGF& gf, const Kernel& kernel, const Telescoper& tel) {
  if (tel.opcoeffs.empty() || tel.opcoeffs.back().is_zero()) return false;
  if (static_cast<int>(tel.opcoeffs.size()) != tel.order + 1) return false;
  const BRatFunc& r = gf.value();
  if (r.is_zero()) return true;
  const Frac rf{r.num(), r.den()};
  const Frac inv_r{r.den(), r.num()};
  const URatFunc k = log_derivative(kernel);
  const Frac lx = add(mul(d_x(rf), inv_r), Frac{from_inner(k.num()), from_inner(k.den())});

  Frac lhs{BPoly(), BPoly(UPoly(1))};
  Frac dr = rf;
  for (int i = 0; i <= tel.order; ++i) {
    if (i > 0) dr = d_t(dr);
    const UPoly& a = tel.opcoeffs[static_cast<std::size_t>(i)];
    if (!a.is_zero()) lhs = add(lhs, mul(Frac{from_outer(a), BPoly(UPoly(1))}, dr));
  }
  lhs = mul(lhs, inv_r);
  const Frac y{tel.certificate.num(), tel.certificate.den()};
  const Frac rhs = add(d_x(y), mul(y, lx));
  return (lhs.n * rhs.d - rhs.n * lhs.d).is_zero();
}

namespace {

// Limit of Q(x, t) * exp(integral rho) at x = at, where the transcendental
// factor behaves like |x - at|^c near a simple pole of rho.
URatFunc endpoint_value(const BRatFunc& q, const Kernel& kernel, const Rational& at) {
  auto fail = [&](const std::string& why) -> URatFunc {
    throw Error(ErrorKind::BoundaryNotEvaluable, why + " at x = " + at.to_string());
  };
  if (q.is_zero()) return URatFunc();
  const int num_mult = inner_root_multiplicity(q.num(), at);
  const int den_mult = inner_root_multiplicity(q.den(), at);
  const int order = num_mult - den_mult;

  if (kernel.is_rational()) {
    if (order < 0) fail("certificate has a pole");
    return evaluate_inner(q, at);
  }

  const UPoly& u = kernel.logderiv.num();
  const UPoly& v = kernel.logderiv.den();
  const int pole = root_multiplicity(v, at);
  if (pole > 1) fail("kernel has an essential singularity");
  Rational c(0);
  if (pole == 1) c = evaluate(u, at) / evaluate(derivative(v), at);
  if (Rational(order) + c > Rational(0)) return URatFunc();
  return fail("certificate does not vanish against the kernel");
}

}  // namespace

URatFunc boundary_rhs(const BivariateGF& gf, const Kernel& kernel, const Telescoper& tel, const Rational& alpha,
                      const Rational& beta) {
  const BRatFunc q = tel.certificate * gf.value() * from_inner(kernel.prefactor);
  return endpoint_value(q, kernel, beta) - endpoint_value(q, kernel, alpha);
}

}  // namespace cfint
