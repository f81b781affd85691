#include "cfint/acceptance.hpp"

#include <boost/math/constants/constants.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

#include "cfint/format.hpp"
#include "cfint/genfun.hpp"
#include "cfint/guesser.hpp"
#include "cfint/oracle.hpp"
#include "cfint/parser.hpp"
#include "cfint/pipeline.hpp"
#include "cfint/recurrence.hpp"
#include "cfint/telescoper.hpp"

namespace cfint {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  // Records the first failure only.
  void expect(bool ok, const std::string& what) {
    if (ok || !passed) return;
    passed = false;
    detail = what;
  }
};

UPoly px(const char* s) { return parse_upoly(s, Var::x); }
UPoly pt(const char* s) { return parse_upoly(s, Var::t); }
UPoly pn(const char* s) { return parse_upoly(s, Var::n); }

std::vector<UPoly> pointwise_power(const std::vector<UPoly>& v, unsigned r) {
  std::vector<UPoly> out;
  for (const auto& p : v) out.push_back(pow(p, r));
  return out;
}

// x^n p(1/x), by reading the coefficient list backwards.
UPoly reflect(const UPoly& p, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(n - k)] = p.coeff(k);
  return UPoly(std::move(c));
}

// (n+1)(n+3) a(n+2) - (n-1)(n+1) a(n) = 0, a(0) = 2, a(1) = 0.
Recurrence reference_plain_chebyshev() {
  Recurrence r;
  r.order = 2;
  r.coeffs = {pn("-(n-1)*(n+1)"), UPoly(), pn("(n+1)*(n+3)")};
  r.threshold = 0;
  r.initial_terms = {Rational(2), Rational(0)};
  return r;
}

Outcome plain_chebyshev(Exec exec) {
  Outcome o;
  const CFiniteSeq t = chebyshev_t();
  const BivariateGF gf = generating_function(t);
  const Telescoper tel = telescope(gf, trivial_kernel(), 6, exec);
  o.expect(verify_certificate(gf, trivial_kernel(), tel), "certificate does not verify");
  const URatFunc rhs = boundary_rhs(gf, trivial_kernel(), tel, Rational(-1), Rational(1));
  const IntegralProblem prob{t, trivial_kernel(), Rational(-1), Rational(1)};
  const auto oracle = exact_terms(prob, 31, exec);
  const Recurrence rec = attach_initials(ode_to_recurrence(tel.opcoeffs, rhs), oracle);
  o.expect(annihilates(rec, oracle), "telescoper recurrence does not annihilate oracle terms 0..30");
  o.expect(unroll(rec, 31) == oracle, "telescoper recurrence does not reproduce oracle terms 0..30");

  const Options opt;
  const int count = (opt.max_order + 1) * (opt.max_degree + 1) + opt.max_order + opt.margin;
  const auto guess = guess_precursive(exact_terms(prob, count, exec), opt.max_order, opt.max_degree, opt.margin, exec);
  o.expect(guess.has_value(), "guesser found nothing");
  if (!guess) return o;
  const Recurrence ref = reference_plain_chebyshev();
  o.expect(guess->initial_terms.size() >= 2 && guess->initial_terms[0] == Rational(2) &&
               guess->initial_terms[1] == Rational(0),
           "guessed initial terms are not a(0)=2, a(1)=0");
  o.expect(annihilates(ref, unroll(*guess, 51)), "reference recurrence does not annihilate the guessed sequence");
  o.expect(annihilates(*guess, unroll(ref, 51)), "guessed recurrence does not annihilate the reference sequence");
  o.expect(unroll(*guess, 51) == unroll(ref, 51), "guessed and reference sequences differ");
  if (o.passed)
    o.detail = "telescoper order " + std::to_string(tel.order) + ", recurrence order " + std::to_string(rec.order) +
               " exact on n<=30; guess [" + format(guess->coeffs.front(), Var::n) + ", ..., " +
               format(guess->coeffs.back(), Var::n) + "] matches reference to n=50";
  return o;
}

Outcome worked_telescoper(Exec exec) {
  Outcome o;
  const CFiniteSeq geo({px("x")}, {UPoly(1)});
  const BivariateGF gf = generating_function(geo);
  o.expect(gf.value() == parse_bivariate("1/(1-x*t)"), "generating function is not 1/(1-x*t)");
  const Telescoper tel = telescope(gf, trivial_kernel(), 6, exec);
  o.expect(tel.order == 1, "telescoper order is " + std::to_string(tel.order) + ", expected 1");
  if (tel.order != 1) return o;
  o.expect(verify_certificate(gf, trivial_kernel(), tel), "certificate does not verify");

  // Operator t(1-t) D + (1-t) up to a factor lambda(t).
  const UPoly a1 = pt("t*(1-t)");
  const UPoly a0 = pt("1-t");
  o.expect(tel.opcoeffs[0] * a1 == tel.opcoeffs[1] * a0, "operator is not proportional to t(1-t)D + (1-t)");
  const URatFunc lambda = URatFunc(a1) / URatFunc(tel.opcoeffs[1]);
  const auto lift = [](const UPoly& p) { return BPoly(p.map([](const Rational& c) { return UPoly(c); })); };
  const BRatFunc lambda_b(lift(a1), lift(tel.opcoeffs[1]));
  o.expect(tel.certificate * lambda_b == parse_bivariate("(1-t)/t"), "scaled certificate multiplier is not (1-t)/t");
  const URatFunc rhs = boundary_rhs(gf, trivial_kernel(), tel, Rational(0), Rational(1));
  o.expect(rhs * lambda == URatFunc(1), "scaled boundary rhs is not 1");

  const Recurrence rec = ode_to_recurrence(tel.opcoeffs, rhs);
  std::vector<Rational> harmonic;
  for (int n = 0; n <= 30; ++n) harmonic.push_back(Rational(mpz_class(1), mpz_class(n + 1)));
  const Recurrence full = attach_initials(rec, harmonic);
  o.expect(unroll(full, 31) == harmonic, "unrolled recurrence is not 1/(n+1) for n<=30");
  const IntegralProblem prob{geo, trivial_kernel(), Rational(0), Rational(1)};
  o.expect(exact_terms(prob, 31, exec) == harmonic, "power-rule oracle disagrees with 1/(n+1)");
  if (o.passed)
    o.detail = "operator [" + format(tel.opcoeffs[0], Var::t) + ", " + format(tel.opcoeffs[1], Var::t) +
               "], lambda = " + format(lambda, Var::t) + ", a(n) = 1/(n+1) for n<=30";
  return o;
}

Outcome generating_function_case(Exec) {
  Outcome o;
  const BivariateGF gf = generating_function(chebyshev_t());
  o.expect(gf.value() == parse_bivariate("(1-x*t)/(1-2*x*t+t^2)"), "generating function is " + format(gf.value()));
  o.expect(format(gf.value()) == "(1-x*t)/(1-2*x*t+t^2)", "printed form is " + format(gf.value()));
  o.expect(taylor_coeffs(gf, 14) == terms(chebyshev_t(), 14), "Taylor coefficients differ from T_0..T_13");
  if (o.passed) o.detail = format(gf.value()) + ", 14 Taylor coefficients match";
  return o;
}

Outcome closure_suite(Exec) {
  Outcome o;
  const CFiniteSeq t = chebyshev_t();
  const CFiniteSeq sq = product(t, t);
  o.expect(sq.order() <= 4, "product(T,T) has order " + std::to_string(sq.order()));
  o.expect(verify_annihilation(sq, pointwise_power(terms(t, 21), 2)), "product(T,T) does not annihilate T_n^2, n<=20");
  const CFiniteSeq cube = power(t, 3);
  o.expect(cube.order() <= 8, "power(T,3) has order " + std::to_string(cube.order()));
  o.expect(verify_annihilation(cube, pointwise_power(terms(t, 31), 3)), "power(T,3) does not annihilate T_n^3, n<=30");
  const CFiniteSeq r = reverse(t);
  o.expect(r.coeffs() == std::vector<UPoly>{UPoly(2), px("-x^2")}, "reverse(T) coefficients are not [2, -x^2]");
  const auto tt = terms(t, 7);
  const auto rt = terms(r, 7);
  for (int n = 0; n <= 6; ++n)
    o.expect(rt[static_cast<std::size_t>(n)] == reflect(tt[static_cast<std::size_t>(n)], n),
             "reverse(T) term identity fails at n=" + std::to_string(n));
  if (o.passed)
    o.detail = "orders " + std::to_string(sq.order()) + ", " + std::to_string(cube.order()) + "; reverse coeffs [2, -x^2]";
  return o;
}

CFiniteSeq random_sequence(std::mt19937_64& rng) {
  const auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto poly = [&] {
    std::vector<Rational> c;
    const long d = uniform(0, 1);
    for (long i = 0; i <= d; ++i) c.push_back(Rational(uniform(-3, 3)));
    return UPoly(std::move(c));
  };
  const int order = static_cast<int>(uniform(1, 2));
  std::vector<UPoly> coeffs;
  std::vector<UPoly> init;
  for (int i = 0; i < order; ++i) coeffs.push_back(poly());
  while (coeffs.back().is_zero()) coeffs.back() = poly();
  for (int i = 0; i < order; ++i) init.push_back(poly());
  return CFiniteSeq(std::move(coeffs), std::move(init));
}

Outcome certificate_fuzz(Exec exec) {
  Outcome o;
  std::mt19937_64 rng(20240605);
  constexpr int kCases = 240;
  int telescoped = 0;
  int counterexamples = 0;
  for (int i = 0; i < kCases; ++i) {
    const CFiniteSeq seq = random_sequence(rng);
    const BivariateGF gf = generating_function(seq);
    try {
      const Telescoper tel = telescope(gf, trivial_kernel(), 6, exec);
      ++telescoped;
      if (!verify_certificate(gf, trivial_kernel(), tel)) ++counterexamples;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoTelescoperFound) throw;
    } catch (const std::logic_error&) {
      ++counterexamples;
    }
  }
  o.expect(counterexamples == 0, std::to_string(counterexamples) + " certificates failed verification");
  o.expect(telescoped > 0, "no sequence telescoped");
  o.detail = std::to_string(kCases) + " sequences, " + std::to_string(telescoped) + " telescoped, " +
             std::to_string(counterexamples) + " counterexamples";
  return o;
}

Outcome squared_chebyshev(Exec exec) {
  Outcome o;
  const CFiniteSeq sq = power(chebyshev_t(), 2);
  const BivariateGF gf = generating_function(sq);
  const Telescoper tel = telescope(gf, trivial_kernel(), 6, exec);
  o.expect(verify_certificate(gf, trivial_kernel(), tel), "certificate does not verify");
  const URatFunc rhs = boundary_rhs(gf, trivial_kernel(), tel, Rational(-1), Rational(1));
  const IntegralProblem prob{sq, trivial_kernel(), Rational(-1), Rational(1)};
  const auto oracle = exact_terms(prob, 51, exec);
  o.expect(oracle[0] == Rational(2) && oracle[1] == Rational(mpz_class(2), mpz_class(3)) &&
               oracle[2] == Rational(mpz_class(14), mpz_class(15)),
           "oracle spot values are not 2, 2/3, 14/15");
  const Recurrence rec = attach_initials(ode_to_recurrence(tel.opcoeffs, rhs), oracle);

  const Options opt;
  const int count = (opt.max_order + 1) * (opt.max_degree + 1) + opt.max_order + opt.margin;
  const auto guess = guess_precursive(exact_terms(prob, count, exec), opt.max_order, opt.max_degree, opt.margin, exec);
  o.expect(guess.has_value(), "guesser found nothing");
  if (!guess) return o;
  const auto tel_terms = unroll(rec, 51);
  const auto guess_terms = unroll(*guess, 51);
  o.expect(tel_terms == oracle, "telescoper recurrence does not reproduce the oracle for n<=50");
  o.expect(annihilates(*guess, tel_terms), "guess does not annihilate telescoper terms n<=50");
  o.expect(annihilates(rec, guess_terms), "telescoper recurrence does not annihilate guessed terms n<=50");
  if (o.passed)
    o.detail = "telescoper order " + std::to_string(tel.order) + ", recurrence orders " + std::to_string(rec.order) +
               " / " + std::to_string(guess->order) + ", mutual annihilation to n=50";
  return o;
}

Outcome weighted_chebyshev(Exec exec) {
  Outcome o;
  using boost::math::constants::pi;
  const CFiniteSeq sq = power(chebyshev_t(), 2);
  const IntegralProblem prob{sq, chebyshev_weight(), Rational(-1), Rational(1)};
  const auto seeds = numeric_terms(prob, 12, 30, exec);
  const BigFloat tol = kNumericTolerance;
  for (int n = 0; n <= 6; ++n) {
    const BigFloat expected = n == 0 ? pi<BigFloat>() : pi<BigFloat>() / 2;
    o.expect(abs(seeds[static_cast<std::size_t>(n)] - expected) <= tol,
             "numeric a(" + std::to_string(n) + ") is off by more than 1e-8");
  }

  const BivariateGF gf = generating_function(sq);
  std::string path;
  try {
    const Telescoper tel = telescope(gf, chebyshev_weight(), 6, exec);
    o.expect(verify_certificate(gf, chebyshev_weight(), tel), "certificate does not verify");
    const URatFunc rhs = boundary_rhs(gf, chebyshev_weight(), tel, Rational(-1), Rational(1));
    const Recurrence rec = ode_to_recurrence(tel.opcoeffs, rhs);
    const auto unrolled = unroll_numeric(rec, seeds, 12);
    for (int n = 0; n < 12; ++n)
      o.expect(abs(unrolled[static_cast<std::size_t>(n)] - seeds[static_cast<std::size_t>(n)]) <= tol,
               "unrolled recurrence departs from quadrature at n=" + std::to_string(n));
    o.expect(max_residual(rec, seeds) <= tol, "recurrence residual on quadrature values exceeds 1e-8");
    path = "telescoper path, recurrence order " + std::to_string(rec.order) + " from " +
           std::to_string(required_initials(rec)) + " numeric seeds";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BoundaryNotEvaluable) throw;
    path = "boundary not evaluable; numeric description only";
  }

  // Same job through the report pipeline.
  const Report rep = run_text(acceptance_jobs()[3].text, {}, exec);
  o.expect(rep.exit == Exit::ok, "pipeline report for the weighted job has status " + rep.body["status"].get<std::string>());
  if (o.passed) o.detail = "a(0)=pi, a(1..6)=pi/2 within 1e-8; " + path;
  return o;
}

Outcome determinism(Exec exec) {
  Outcome o;
  int checked = 0;
  for (const auto& job : acceptance_jobs()) {
    const Report first = run_text(job.text, {}, exec);
    const std::string a = emit(first, Format::json);
    const std::string b = emit(run_text(job.text, {}, exec), Format::json);
    const std::string s = emit(run_text(job.text, {}, Exec::serial), Format::json);
    o.expect(a == b, job.name + ": two runs differ");
    o.expect(a == s, job.name + ": serial and parallel reports differ");
    o.expect(first.exit == Exit::ok, job.name + ": status " + first.body["status"].get<std::string>());
    Json parsed;
    try {
      parsed = Json::parse(a);
    } catch (const Json::parse_error&) {
      o.expect(false, job.name + ": report is not valid JSON");
      continue;
    }
    o.expect(parsed.dump(2) + "\n" == a, job.name + ": JSON does not re-serialize identically");
    const auto bad = round_trip_failures(parsed);
    o.expect(bad.empty(), job.name + ": expression at " + (bad.empty() ? "" : bad.front()) + " does not round-trip");
    checked += static_cast<int>(embedded_expressions(parsed).size());
  }
  const Report genfun = run_text(acceptance_jobs()[0].text, {}, exec);
  o.expect(genfun.body.value("genfun", "") == "(1-x*t)/(1-2*x*t+t^2)", "genfun job prints the wrong expression");
  const Report terms4 = run_text(R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "terms", "count": 4})j", {}, exec);
  o.expect(terms4.body["terms"] == Json::array({"1", "x", "2*x^2-1", "4*x^3-3*x"}), "terms job prints the wrong terms");
  if (o.passed)
    o.detail = std::to_string(acceptance_jobs().size()) + " jobs byte-identical across runs; " + std::to_string(checked) +
               " embedded expressions round-trip";
  return o;
}

struct Case {
  const char* title;
  double limit;
  std::function<Outcome(Exec)> body;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> all{
      {"Chebyshev plain integral end-to-end", 10, plain_chebyshev},
      {"worked telescoper 1/(1-x*t) on [0,1]", 2, worked_telescoper},
      {"generating function of Chebyshev T", 0, generating_function_case},
      {"closure suite", 0, closure_suite},
      {"certificate self-verification fuzz", 60, certificate_fuzz},
      {"squared Chebyshev integral", 0, squared_chebyshev},
      {"Chebyshev-weighted squared integral", 0, weighted_chebyshev},
      {"report determinism and round-trip", 0, determinism},
  };
  return all;
}

}  // namespace

const std::vector<NamedJob>& acceptance_jobs() {
  static const std::vector<NamedJob> jobs{
      {"chebyshev_genfun", R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "genfun"})j"},
      {"chebyshev_recurrence",
       R"j({"sequence": {"builtin": "chebyshev_T"}, "kernel": {"type": "trivial"}, "interval": ["-1", "1"], "task": "recurrence"})j"},
      {"geometric_telescope",
       R"j({"sequence": {"coeffs": ["x"], "init": ["1"]}, "interval": ["0", "1"], "task": "telescope"})j"},
      {"chebyshev_squared_weighted",
       R"j({"sequence": {"builtin": "chebyshev_T"}, "transforms": [{"power": 2}],
           "kernel": {"type": "hyperexponential", "prefactor": "1", "logderiv": "x/(1-x^2)", "form": "chebyshev"},
           "interval": ["-1", "1"], "task": "recurrence"})j"},
      {"chebyshev_squared_verify",
       R"j({"sequence": {"builtin": "chebyshev_T"}, "transforms": [{"power": 2}], "interval": ["-1", "1"], "task": "verify"})j"},
      {"chebyshev_u_guess",
       R"j({"sequence": {"builtin": "chebyshev_U"}, "kernel": {"type": "polynomial", "expr": "1-x^2"},
           "interval": ["-1", "1"], "task": "guess"})j"},
  };
  return jobs;
}

CriterionResult run_criterion(int id, Exec exec) {
  const auto& all = cases();
  if (id < 1 || id > static_cast<int>(all.size())) throw Error(ErrorKind::InvalidInput, "no criterion " + std::to_string(id));
  const Case& c = all[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.limit_seconds = c.limit;
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.body(exec);
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = o.passed;
  r.detail = o.detail;
  if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
    r.passed = false;
    r.detail += "; over the time limit";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(Exec exec) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(cases().size()); ++id) out.push_back(run_criterion(id, exec));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char timing[64];
  if (r.limit_seconds > 0)
    std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", r.seconds, r.limit_seconds);
  else
    std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
  return "criterion " + std::to_string(r.id) + " " + (r.passed ? "PASS" : "FAIL") + "  " + r.title + " [" + timing +
         "]: " + r.detail;
}

}  // namespace cfint
