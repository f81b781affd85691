#include "doctest.h"

#include "cfint/format.hpp"
#include "cfint/parser.hpp"
#include "cfint/pipeline.hpp"
#include "cfint/recurrence.hpp"
#include "support/series.hpp"

using namespace cfint;

namespace {

const char* kRecurrenceJob =
    R"j({"sequence": {"builtin": "chebyshev_T"}, "kernel": {"type": "trivial"}, "interval": ["-1", "1"], "task": "recurrence"})j";

Report go(const std::string& text, const OptionOverrides& over = {}) { return run_text(text, over); }

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

std::string stage_of(const Report& r) { return r.body["error"]["stage"].get<std::string>(); }

Recurrence from_report(const Json& j) {
  Recurrence r;
  r.order = j["order"].get<int>();
  for (const auto& c : j["coeffs"]) r.coeffs.push_back(parse_upoly(c.get<std::string>(), Var::n));
  r.threshold = j["threshold"].get<int>();
  for (const auto& a : j["initial_terms"]) r.initial_terms.push_back(Rational::parse(a.get<std::string>()));
  return r;
}

}  // namespace

TEST_CASE("genfun task prints the Chebyshev generating function") {
  const Report r = go(R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "genfun"})j");
  CHECK(r.exit == Exit::ok);
  CHECK(r.body["genfun"] == "(1-x*t)/(1-2*x*t+t^2)");
  const std::string json = emit(r, Format::json);
  CHECK(json.find("\"verifications\": []") != std::string::npos);
  CHECK(emit(r, Format::text).find("generating function: (1-x*t)/(1-2*x*t+t^2)") != std::string::npos);
}

TEST_CASE("terms task") {
  const Report r = go(R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "terms", "count": 4})j");
  CHECK(r.exit == Exit::ok);
  CHECK(r.body["terms"] == Json::array({"1", "x", "2*x^2-1", "4*x^3-3*x"}));
}

TEST_CASE("Chebyshev recurrence job") {
  const Report r = go(kRecurrenceJob);
  REQUIRE(r.exit == Exit::ok);
  CHECK(r.body["status"] == "verified");
  const Recurrence tel = from_report(r.body["recurrence"]);
  const Recurrence guess = from_report(r.body["guess"]);
  CHECK(r.body["recurrence"]["initial_terms"] == Json::array({"2", "0"}));

  // Power-rule integrals of T_n computed here, independent of the library oracle.
  std::vector<Rational> oracle;
  for (int n = 0; n <= 40; ++n) oracle.push_back(testing::integrate(term(chebyshev_t(), n), Rational(-1), Rational(1)));
  CHECK(unroll(tel, 41) == oracle);
  CHECK(unroll(guess, 41) == oracle);

  // Same action as (n+1)(n+3) a(n+2) = (n-1)(n+1) a(n).
  Recurrence ref;
  ref.order = 2;
  ref.coeffs = {parse_upoly("-(n-1)*(n+1)", Var::n), UPoly(), parse_upoly("(n+1)*(n+3)", Var::n)};
  CHECK(annihilates(ref, oracle));
  CHECK(annihilates(tel, oracle));

  for (const auto& v : r.body["verifications"]) CHECK(v["passed"].get<bool>());
  CHECK(r.body["verifications"].size() == 6);
}

TEST_CASE("json reports are deterministic and round-trip") {
  const std::string a = emit(go(kRecurrenceJob), Format::json);
  const std::string b = emit(go(kRecurrenceJob), Format::json);
  const std::string s = emit(run_text(kRecurrenceJob, {}, Exec::serial), Format::json);
  CHECK(a == b);
  CHECK(a == s);
  const Json parsed = Json::parse(a);
  CHECK(round_trip_failures(parsed).empty());
  CHECK(embedded_expressions(parsed).size() > 10);
  CHECK_FALSE(has_float(parsed));
}

TEST_CASE("round-trip check catches non-canonical text") {
  Json body;
  body["genfun"] = "(1-x*t)/(1-2*x*t+t^2)";
  body["boundary_rhs"] = "t+t";
  body["terms"] = Json::array({"x", "x^2", "2*x)"});
  const auto bad = round_trip_failures(body);
  CHECK(bad == std::vector<std::string>{"/terms/2", "/boundary_rhs"});
}

TEST_CASE("input errors exit with 2 and name the input stage") {
  const char* jobs[] = {
      R"j({"sequence": {"coeffs": ["2x", "-1"], "init": ["1", "x"]}, "task": "genfun"})j",
      R"j({"sequence": {"coeffs": ["2*y", "-1"], "init": ["1", "x"]}, "task": "genfun"})j",
      R"j({"sequence": {"coeffs": ["1/(x-x)"], "init": ["1"]}, "task": "genfun"})j",
      R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "recurrence"})j",
      R"j({"sequence": {"builtin": "chebyshev_T"}, "interval": ["1", "-1"], "task": "recurrence"})j",
      R"j({"sequence": {"builtin": "legendre"}, "task": "genfun"})j",
      R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "terms"})j",
      R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "genfun", "colour": 1})j",
      R"j({"sequence": {"builtin": "chebyshev_T"}, "kernel": {"type": "hyperexponential", "logderiv": "1/x", "form": "chebyshev"}, "task": "genfun"})j",
      R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "genfun", "options": {"precision": 500}})j",
      R"j({"sequence": {"builtin": "chebyshev_T"}, "task": )j",
  };
  for (const char* j : jobs) {
    const Report r = go(j);
    CHECK_MESSAGE(r.exit == Exit::input_error, j);
    CHECK(stage_of(r) == "input");
    CHECK(r.body["verifications"].empty());
  }
  const Report syntax = go(jobs[0]);
  CHECK(syntax.body["error"]["kind"] == "SyntaxError");
  CHECK(go(jobs[1]).body["error"]["kind"] == "UnknownVariable");
  CHECK(go(jobs[2]).body["error"]["kind"] == "DivisionByZeroExpr");
}

TEST_CASE("guessing needs an exact oracle") {
  const Report r = go(
      R"j({"sequence": {"builtin": "chebyshev_T"}, "kernel": {"type": "rational", "expr": "1/(2+x)"}, "interval": ["-1", "1"], "task": "guess"})j");
  CHECK(r.exit == Exit::input_error);
  CHECK(stage_of(r) == "guess");
}

TEST_CASE("nothing found within the bounds exits with 3") {
  const Report tel = go(kRecurrenceJob, OptionOverrides{0, std::nullopt, std::nullopt, std::nullopt});
  CHECK(tel.exit == Exit::not_found);
  CHECK(stage_of(tel) == "telescope");
  CHECK(tel.body["error"]["kind"] == "NoTelescoperFound");

  const Report g = go(R"j({"sequence": {"builtin": "chebyshev_T"}, "interval": ["-1", "1"], "task": "guess",
                          "options": {"max_order": 1, "max_degree": 0}})j");
  CHECK(g.exit == Exit::not_found);
  CHECK(stage_of(g) == "guess");
}

TEST_CASE("command-line overrides win over job options") {
  const std::string job =
      R"j({"sequence": {"builtin": "chebyshev_T"}, "task": "genfun", "options": {"max_order": 3, "margin": 5}})j";
  const Report plain = go(job);
  CHECK(plain.body["input"]["options"]["max_order"] == 3);
  CHECK(plain.body["input"]["options"]["margin"] == 5);
  OptionOverrides over;
  over.max_order = 2;
  over.precision = 50;
  const Report r = go(job, over);
  CHECK(r.body["input"]["options"]["max_order"] == 2);
  CHECK(r.body["input"]["options"]["margin"] == 5);
  CHECK(r.body["input"]["options"]["precision"] == 50);
  over.precision = 0;
  CHECK(go(job, over).exit == Exit::input_error);
}

TEST_CASE("transforms apply left to right") {
  const Report r = go(R"j({"sequence": {"builtin": "chebyshev_T"}, "transforms": ["reverse", {"power": 2}],
                          "task": "terms", "count": 4})j");
  REQUIRE(r.exit == Exit::ok);
  // (x^n T_n(1/x))^2
  std::vector<std::string> expect;
  for (int n = 0; n < 4; ++n) {
    const UPoly p = term(chebyshev_t(), n);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(n - k)] = p.coeff(k);
    expect.push_back(format(pow(UPoly(std::move(c)), 2), Var::x));
  }
  for (int n = 0; n < 4; ++n) CHECK(r.body["terms"][static_cast<std::size_t>(n)] == expect[static_cast<std::size_t>(n)]);

  const Report p = go(R"j({"sequence": {"builtin": "chebyshev_T"}, "transforms": [{"product": {"builtin": "chebyshev_U"}}],
                          "task": "terms", "count": 5})j");
  for (int n = 0; n < 5; ++n)
    CHECK(p.body["terms"][static_cast<std::size_t>(n)] ==
          format(term(chebyshev_t(), n) * term(chebyshev_u(), n), Var::x));
}

TEST_CASE("rational kernel is validated numerically") {
  const Report r = go(
      R"j({"sequence": {"builtin": "chebyshev_T"}, "kernel": {"type": "rational", "expr": "1/(2+x)"}, "interval": ["-1", "1"], "task": "recurrence"})j");
  CHECK(r.exit == Exit::ok);
  const Json& v = r.body["verifications"].back();
  CHECK(v["check"] == "numeric_consistency");
  CHECK(v.contains("approx"));
  CHECK(r.body["recurrence"].contains("approx"));
  CHECK_FALSE(r.body["recurrence"].contains("initial_terms"));
  CHECK(round_trip_failures(r.body).empty());
}

TEST_CASE("non-evaluable boundary without an exact oracle is a failed verification") {
  const Report r = go(R"j({"sequence": {"builtin": "chebyshev_T"},
      "kernel": {"type": "hyperexponential", "prefactor": "1", "logderiv": "1/(2*x+2)", "form": "power"},
      "interval": ["-1", "1"], "task": "recurrence"})j");
  CHECK(r.exit == Exit::verification_failed);
  CHECK(stage_of(r) == "boundary");
  CHECK(r.body["error"]["kind"] == "BoundaryNotEvaluable");
  CHECK(r.body["verifications"][0]["passed"] == true);
}

TEST_CASE("telescope task without an interval skips the boundary") {
  const Report r = go(R"j({"sequence": {"coeffs": ["x"], "init": ["1"]}, "task": "telescope"})j");
  CHECK(r.exit == Exit::ok);
  CHECK(r.body["telescoper"]["operator"] == Json::array({"1", "t"}));
  CHECK(r.body["telescoper"]["certificate"] == "1/(t)");
  CHECK_FALSE(r.body.contains("boundary_rhs"));
}
