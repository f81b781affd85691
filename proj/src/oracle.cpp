#include "cfint/oracle.hpp"

#include <boost/math/constants/constants.hpp>
#include <deque>
#include <exception>
#include <mutex>
#include <optional>

namespace cfint {

namespace {

void check_problem(const IntegralProblem& prob) {
  if (!(prob.alpha < prob.beta)) throw Error(ErrorKind::InvalidInput, "interval needs alpha < beta");
}

Rational integrate(const UPoly& p, const Rational& lo, const Rational& hi) {
  // Horner on the antiderivative.
  Rational at_hi, at_lo;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(k) / Rational(k + 1);
    at_hi = (at_hi + c) * hi;
    at_lo = (at_lo + c) * lo;
  }
  return at_hi - at_lo;
}

PowerForm recognize(const Kernel& kernel) {
  if (auto f = power_form(kernel)) return *f;
  const UPoly& u = kernel.logderiv.num();
  const UPoly& v = kernel.logderiv.den();
  throw Error(ErrorKind::KernelNotEvaluable, "no closed form for exp(integral of rho) with rho = (" +
                                                 std::to_string(u.degree()) + "-degree)/(" +
                                                 std::to_string(v.degree()) + "-degree)");
}

// Coefficients of p(at + y) in y, as floats.
std::vector<BigFloat> recentred(const UPoly& p, const Rational& at) {
  const UPoly q = compose(p, UPoly(std::vector<Rational>{at, Rational(1)}));
  std::vector<BigFloat> out;
  for (int k = 0; k <= q.degree(); ++k) out.push_back(to_big(q.coeff(k)));
  return out;
}

BigFloat horner(const std::vector<BigFloat>& c, const BigFloat& y) {
  BigFloat s = 0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * y + c[k];
  return s;
}

struct Node {
  BigFloat offset;  // distance from the nearer endpoint, in units of the half-length
  BigFloat weight;  // dx/dtau, in units of the half-length
  bool upper;       // nearer to beta
};

constexpr int kMaxLevel = 12;
const double kTauMax = 6.5;

// Nodes tau = j 2^-level with j odd (all integers j at level 0).
std::vector<Node> level_nodes(int level) {
  const BigFloat half_pi = boost::math::constants::half_pi<BigFloat>();
  const BigFloat h = ldexp(BigFloat(1), -level);
  std::vector<Node> nodes;
  const long jmax = static_cast<long>(kTauMax * static_cast<double>(1L << level));
  for (long j = -jmax; j <= jmax; ++j) {
    if (level > 0 && j % 2 == 0) continue;
    const BigFloat tau = h * j;
    const BigFloat s = half_pi * sinh(tau);
    const BigFloat cs = cosh(s);
    const BigFloat w = half_pi * cosh(tau) / (cs * cs);
    // 1 - tanh|s| = 2 / (1 + e^{2|s|}), without cancellation.
    const BigFloat off = 2 / (1 + exp(2 * abs(s)));
    nodes.push_back({off, w, j > 0});
  }
  return nodes;
}

// Levels are built on first use; deque elements never move.
const std::vector<Node>& nodes_at(int level) {
  static std::mutex mu;
  static std::deque<std::vector<Node>> table;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= level) table.push_back(level_nodes(static_cast<int>(table.size())));
  return table[static_cast<std::size_t>(level)];
}

class Integrand {
 public:
  Integrand(const IntegralProblem& prob, const UPoly& pn, const PowerForm& form)
      : half_(to_big((prob.beta - prob.alpha) / Rational(2))), c_(to_big(form.c)), has_power_(!form.c.is_zero()) {
    const UPoly num = pn * prob.kernel.prefactor.num();
    const UPoly& den = prob.kernel.prefactor.den();
    for (int side = 0; side < 2; ++side) {
      const Rational& at = side == 0 ? prob.alpha : prob.beta;
      num_[side] = recentred(num, at);
      den_[side] = recentred(den, at);
      v_[side] = recentred(form.v, at);
    }
  }

  BigFloat operator()(const Node& node) const {
    const int side = node.upper ? 1 : 0;
    const BigFloat y = node.upper ? BigFloat(-node.offset * half_) : BigFloat(node.offset * half_);
    BigFloat f = horner(num_[side], y);
    if (f == 0) return f;
    f /= horner(den_[side], y);
    if (has_power_) f *= exp(c_ * log(abs(horner(v_[side], y))));
    return f * node.weight * half_;
  }

 private:
  BigFloat half_;
  BigFloat c_;
  bool has_power_;
  std::vector<BigFloat> num_[2], den_[2], v_[2];
};

BigFloat tanh_sinh(const Integrand& f, int precision) {
  const BigFloat tol = pow(BigFloat(10), -precision);
  BigFloat sum = 0;
  std::optional<BigFloat> previous;
  for (int level = 0; level <= kMaxLevel; ++level) {
    for (const auto& node : nodes_at(level)) sum += f(node);
    const BigFloat estimate = ldexp(sum, -level);
    if (previous && level >= 3 && abs(estimate - *previous) <= tol * std::max(BigFloat(1), abs(estimate)))
      return estimate;
    previous = estimate;
  }
  throw Error(ErrorKind::QuadratureFailed, "tanh-sinh did not converge in " + std::to_string(kMaxLevel) + " levels");
}

void check_precision(int precision) {
  if (precision < 1 || precision > 90)
    throw Error(ErrorKind::InvalidInput, "precision must be between 1 and 90 digits");
}

}  // namespace

bool has_exact_oracle(const Kernel& kernel) { return kernel.is_polynomial(); }

std::optional<PowerForm> power_form(const Kernel& kernel) {
  if (kernel.is_rational()) return PowerForm{UPoly(1), Rational(0)};
  const UPoly& u = kernel.logderiv.num();
  const UPoly& v = kernel.logderiv.den();
  const UPoly dv = derivative(v);
  if (v.degree() >= 1 && u.degree() == dv.degree()) {
    const Rational c = u.lead() / dv.lead();
    if (u == scale(dv, c)) return PowerForm{v, c};
  }
  return std::nullopt;
}

Rational exact_term(const IntegralProblem& prob, int n) {
  check_problem(prob);
  if (!has_exact_oracle(prob.kernel))
    throw Error(ErrorKind::ExactOracleUnavailable, "kernel is not a polynomial");
  return integrate(term(prob.seq, n) * prob.kernel.prefactor.num(), prob.alpha, prob.beta);
}

std::vector<Rational> exact_terms(const IntegralProblem& prob, int count, Exec exec) {
  check_problem(prob);
  if (!has_exact_oracle(prob.kernel))
    throw Error(ErrorKind::ExactOracleUnavailable, "kernel is not a polynomial");
  const auto p = terms(prob.seq, count);
  const UPoly& k = prob.kernel.prefactor.num();
  std::vector<Rational> out(p.size());
  const auto size = static_cast<long>(p.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = 0; n < size; ++n)
      out[static_cast<std::size_t>(n)] = integrate(p[static_cast<std::size_t>(n)] * k, prob.alpha, prob.beta);
  } else {
    for (long n = 0; n < size; ++n)
      out[static_cast<std::size_t>(n)] = integrate(p[static_cast<std::size_t>(n)] * k, prob.alpha, prob.beta);
  }
  return out;
}

BigFloat numeric_term(const IntegralProblem& prob, int n, int precision) {
  check_problem(prob);
  check_precision(precision);
  return tanh_sinh(Integrand(prob, term(prob.seq, n), recognize(prob.kernel)), precision);
}

std::vector<BigFloat> numeric_terms(const IntegralProblem& prob, int count, int precision, Exec exec) {
  check_problem(prob);
  check_precision(precision);
  const PowerForm form = recognize(prob.kernel);
  const auto p = terms(prob.seq, count);
  std::vector<BigFloat> out(p.size());
  const auto size = static_cast<long>(p.size());
  if (exec == Exec::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = 0; n < size; ++n) {
      try {
        out[static_cast<std::size_t>(n)] = tanh_sinh(Integrand(prob, p[static_cast<std::size_t>(n)], form), precision);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (long n = 0; n < size; ++n)
      out[static_cast<std::size_t>(n)] = tanh_sinh(Integrand(prob, p[static_cast<std::size_t>(n)], form), precision);
  }
  return out;
}

}  // namespace cfint
