#include "cfint/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "cfint/format.hpp"
#include "cfint/genfun.hpp"
#include "cfint/guesser.hpp"
#include "cfint/oracle.hpp"
#include "cfint/parser.hpp"
#include "cfint/recurrence.hpp"
#include "cfint/telescoper.hpp"

namespace cfint {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::string expr_text(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  bad(where + ": expected an expression string");
}

int int_field(const Json& v, const std::string& where, int lo, int hi) {
  if (!v.is_number_integer()) bad(where + ": expected an integer");
  const auto k = v.get<long long>();
  if (k < lo || k > hi) bad(where + ": must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(k);
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, _] : obj.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      bad(where + ": unknown field '" + k + "'");
}

std::vector<UPoly> poly_list(const Json& v, const std::string& where) {
  if (!v.is_array()) bad(where + ": expected an array");
  std::vector<UPoly> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_upoly(expr_text(v[i], where), Var::x));
  return out;
}

CFiniteSeq parse_sequence(const Json& v) {
  if (!v.is_object()) bad("sequence: expected an object");
  if (v.contains("builtin")) {
    only_keys(v, {"builtin"}, "sequence");
    if (!v["builtin"].is_string()) bad("sequence.builtin: expected a name");
    const auto name = v["builtin"].get<std::string>();
    auto seq = builtin_sequence(name);
    if (!seq) bad("unknown builtin sequence '" + name + "'");
    return *seq;
  }
  only_keys(v, {"order", "coeffs", "init"}, "sequence");
  if (!v.contains("coeffs") || !v.contains("init")) bad("sequence: needs 'builtin' or 'coeffs' and 'init'");
  CFiniteSeq seq(poly_list(v["coeffs"], "sequence.coeffs"), poly_list(v["init"], "sequence.init"));
  if (v.contains("order") && int_field(v["order"], "sequence.order", 1, 64) != seq.order())
    bad("sequence.order does not match the number of coefficients");
  return seq;
}

CFiniteSeq apply_transforms(CFiniteSeq seq, const Json& list) {
  if (!list.is_array()) bad("transforms: expected an array");
  for (const auto& tr : list) {
    if (tr.is_string()) {
      if (tr.get<std::string>() != "reverse") bad("transforms: unknown transform '" + tr.get<std::string>() + "'");
      seq = reverse(seq);
      continue;
    }
    if (!tr.is_object() || tr.size() != 1) bad("transforms: each entry is \"reverse\" or a one-key object");
    const std::string key = tr.begin().key();
    const Json& arg = tr.begin().value();
    if (key == "power") {
      seq = power(seq, static_cast<unsigned>(int_field(arg, "transforms.power", 0, 8)));
    } else if (key == "product") {
      seq = product(seq, parse_sequence(arg));
    } else if (key == "reverse") {
      if (!arg.is_boolean()) bad("transforms.reverse: expected true or false");
      if (arg.get<bool>()) seq = reverse(seq);
    } else {
      bad("transforms: unknown transform '" + key + "'");
    }
  }
  return seq;
}

void parse_kernel(const Json& v, Job& job) {
  if (!v.is_object() || !v.contains("type") || !v["type"].is_string()) bad("kernel: expected an object with a 'type'");
  const auto type = v["type"].get<std::string>();
  Kernel k;
  if (type == "trivial") {
    only_keys(v, {"type"}, "kernel");
  } else if (type == "polynomial") {
    only_keys(v, {"type", "expr"}, "kernel");
    if (!v.contains("expr")) bad("kernel: 'expr' is required");
    k.prefactor = URatFunc(parse_upoly(expr_text(v["expr"], "kernel.expr"), Var::x));
  } else if (type == "rational") {
    only_keys(v, {"type", "expr"}, "kernel");
    if (!v.contains("expr")) bad("kernel: 'expr' is required");
    k.prefactor = parse_univariate(expr_text(v["expr"], "kernel.expr"), Var::x);
  } else if (type == "hyperexponential") {
    only_keys(v, {"type", "prefactor", "logderiv", "form"}, "kernel");
    if (!v.contains("logderiv") || !v.contains("form") || !v["form"].is_string())
      bad("kernel: 'logderiv' and 'form' are required");
    if (v.contains("prefactor")) k.prefactor = parse_univariate(expr_text(v["prefactor"], "kernel.prefactor"), Var::x);
    k.logderiv = parse_univariate(expr_text(v["logderiv"], "kernel.logderiv"), Var::x);
    job.kernel_form = v["form"].get<std::string>();
    if (k.logderiv.is_zero()) bad("kernel: a zero logderiv is a rational kernel");
    if (job.kernel_form == "chebyshev") {
      if (k.logderiv != chebyshev_weight().logderiv) bad("kernel: logderiv is not x/(1-x^2) for form 'chebyshev'");
    } else if (job.kernel_form == "power") {
      if (!power_form(k)) bad("kernel: logderiv is not c*v'/v for form 'power'");
    } else {
      bad("kernel: unknown form '" + job.kernel_form + "'");
    }
  } else {
    bad("kernel: unknown type '" + type + "'");
  }
  if (k.prefactor.is_zero()) bad("kernel: the kernel is zero");
  job.kernel = std::move(k);
}

Task parse_task(const std::string& s) {
  if (s == "genfun") return Task::genfun;
  if (s == "terms") return Task::terms;
  if (s == "telescope") return Task::telescope;
  if (s == "recurrence") return Task::recurrence;
  if (s == "guess") return Task::guess;
  if (s == "verify") return Task::verify;
  bad("unknown task '" + s + "'");
}

const char* task_name(Task t) {
  switch (t) {
    case Task::genfun: return "genfun";
    case Task::terms: return "terms";
    case Task::telescope: return "telescope";
    case Task::recurrence: return "recurrence";
    case Task::guess: return "guess";
    case Task::verify: return "verify";
  }
  return "?";
}

bool needs_interval(Task t) { return t == Task::recurrence || t == Task::guess || t == Task::verify; }

}  // namespace

Job parse_job(const Json& doc, const OptionOverrides& overrides) {
  if (!doc.is_object()) bad("job: expected a JSON object");
  only_keys(doc, {"sequence", "transforms", "kernel", "interval", "task", "count", "options"}, "job");
  if (!doc.contains("sequence")) bad("job: 'sequence' is required");
  if (!doc.contains("task") || !doc["task"].is_string()) bad("job: 'task' is required");
  Job job;
  job.task = parse_task(doc["task"].get<std::string>());
  job.seq = parse_sequence(doc["sequence"]);
  if (doc.contains("transforms")) job.seq = apply_transforms(job.seq, doc["transforms"]);
  if (doc.contains("kernel")) parse_kernel(doc["kernel"], job);

  if (doc.contains("interval")) {
    const Json& iv = doc["interval"];
    if (!iv.is_array() || iv.size() != 2) bad("interval: expected [alpha, beta]");
    job.alpha = Rational::parse(expr_text(iv[0], "interval"));
    job.beta = Rational::parse(expr_text(iv[1], "interval"));
    if (!(*job.alpha < *job.beta)) bad("interval: need alpha < beta");
  } else if (needs_interval(job.task)) {
    bad(std::string("interval: required by task '") + task_name(job.task) + "'");
  }

  if (doc.contains("count")) job.count = int_field(doc["count"], "count", 0, 10000);
  else if (job.task == Task::terms) bad("count: required by task 'terms'");

  if (doc.contains("options")) {
    const Json& o = doc["options"];
    if (!o.is_object()) bad("options: expected an object");
    only_keys(o, {"max_order", "max_degree", "precision", "margin"}, "options");
    if (o.contains("max_order")) job.options.max_order = int_field(o["max_order"], "options.max_order", 0, 12);
    if (o.contains("max_degree")) job.options.max_degree = int_field(o["max_degree"], "options.max_degree", 0, 12);
    if (o.contains("precision")) job.options.precision = int_field(o["precision"], "options.precision", 1, 90);
    if (o.contains("margin")) job.options.margin = int_field(o["margin"], "options.margin", 0, 64);
  }
  const auto over = [](std::optional<int> v, int& field, int lo, int hi, const char* name) {
    if (!v) return;
    if (*v < lo || *v > hi) bad(std::string(name) + ": must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    field = *v;
  };
  over(overrides.max_order, job.options.max_order, 0, 12, "max-order");
  over(overrides.max_degree, job.options.max_degree, 0, 12, "max-degree");
  over(overrides.precision, job.options.precision, 1, 90, "precision");
  over(overrides.margin, job.options.margin, 0, 64, "margin");
  return job;
}

Job parse_job_text(const std::string& text, const OptionOverrides& overrides) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("job is not valid JSON: ") + e.what());
  }
  return parse_job(doc, overrides);
}

// ---------------------------------------------------------------------------

namespace {

Json strings(const std::vector<UPoly>& ps, Var v) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(format(p, v));
  return a;
}

Json strings(const std::vector<Rational>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(r.to_string());
  return a;
}

std::string approx(const BigFloat& v) { return v.str(20, std::ios_base::scientific); }

Json describe_recurrence(const Recurrence& rec) {
  Json j;
  j["order"] = rec.order;
  j["coeffs"] = strings(rec.coeffs, Var::n);
  j["threshold"] = rec.threshold;
  j["singular"] = rec.singular;
  Json ex = Json::array();
  for (const auto& eq : rec.exceptional) {
    Json e;
    Json idx = Json::array();
    Json cs = Json::array();
    for (const auto& [k, c] : eq.coeffs) {
      idx.push_back(k);
      cs.push_back(c.to_string());
    }
    e["index"] = idx;
    e["coeffs"] = cs;
    e["value"] = eq.value.to_string();
    ex.push_back(e);
  }
  j["exceptional"] = ex;
  j["initial_terms"] = strings(rec.initial_terms);
  return j;
}

Json describe_input(const Job& job) {
  Json in;
  Json seq;
  seq["order"] = job.seq.order();
  seq["coeffs"] = strings(job.seq.coeffs(), Var::x);
  seq["init"] = strings(job.seq.init(), Var::x);
  in["sequence"] = seq;
  Json k;
  if (job.kernel.is_rational()) {
    k["type"] = job.kernel.is_polynomial() ? (job.kernel.prefactor == URatFunc(1) ? "trivial" : "polynomial") : "rational";
    k["prefactor"] = format(job.kernel.prefactor, Var::x);
  } else {
    k["type"] = "hyperexponential";
    k["prefactor"] = format(job.kernel.prefactor, Var::x);
    k["logderiv"] = format(job.kernel.logderiv, Var::x);
    k["form"] = job.kernel_form;
  }
  in["kernel"] = k;
  if (job.alpha) in["interval"] = Json::array({job.alpha->to_string(), job.beta->to_string()});
  if (job.task == Task::terms) in["count"] = job.count;
  in["options"] = {{"max_order", job.options.max_order},
                   {"max_degree", job.options.max_degree},
                   {"precision", job.options.precision},
                   {"margin", job.options.margin}};
  return in;
}

Exit exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::DivisionByZeroExpr:
    case ErrorKind::InvalidInput:
    case ErrorKind::ReverseUnsupportedDegreeProfile:
    case ErrorKind::NotExpandable:
    case ErrorKind::ExactOracleUnavailable:
    case ErrorKind::KernelNotEvaluable:
      return Exit::input_error;
    case ErrorKind::NoTelescoperFound:
      return Exit::not_found;
    default:
      return Exit::verification_failed;
  }
}

const char* status_name(Exit e) {
  switch (e) {
    case Exit::ok: return "verified";
    case Exit::verification_failed: return "verification_failed";
    case Exit::input_error: return "input_error";
    case Exit::not_found: return "not_found";
  }
  return "?";
}

// Stage-tagged failure that is not a library Error.
struct NotFound {
  std::string what;
};

class Runner {
 public:
  Runner(const Job& job, Exec exec) : job_(job), exec_(exec) {}

  Report go() {
    body_["task"] = task_name(job_.task);
    body_["input"] = describe_input(job_);
    try {
      dispatch();
    } catch (const Error& e) {
      fail(exit_for(e.kind()), to_string(e.kind()), e.what());
    } catch (const NotFound& e) {
      fail(Exit::not_found, "NotFound", e.what);
    } catch (const std::exception& e) {
      fail(Exit::verification_failed, "InternalError", e.what());
    }
    if (!notes_.empty()) body_["notes"] = notes_;
    body_["verifications"] = verifications_;
    if (exit_ == Exit::ok &&
        std::any_of(verifications_.begin(), verifications_.end(), [](const Json& v) { return !v["passed"].get<bool>(); }))
      exit_ = Exit::verification_failed;
    body_["status"] = status_name(exit_);
    body_["exit_code"] = static_cast<int>(exit_);
    return Report{std::move(body_), exit_};
  }

 private:
  void fail(Exit exit, const std::string& kind, const std::string& message) {
    exit_ = exit;
    body_["error"] = {{"stage", stage_}, {"kind", kind}, {"message", message}};
  }

  Json& check(const std::string& name, bool passed, const std::string& detail) {
    verifications_.push_back({{"check", name}, {"passed", passed}, {"detail", detail}});
    return verifications_.back();
  }

  IntegralProblem problem() const { return IntegralProblem{job_.seq, job_.kernel, *job_.alpha, *job_.beta}; }

  void dispatch() {
    switch (job_.task) {
      case Task::genfun:
        stage_ = "genfun";
        body_["genfun"] = format(generating_function(job_.seq).value());
        return;
      case Task::terms:
        stage_ = "terms";
        body_["terms"] = strings(terms(job_.seq, job_.count), Var::x);
        return;
      case Task::telescope:
        telescope_path(false);
        return;
      case Task::guess:
        guess_path(true);
        return;
      case Task::recurrence:
      case Task::verify:
        full_path();
        return;
    }
  }

  // Returns false when the boundary term could not be evaluated.
  bool telescope_path(bool need_rhs) {
    stage_ = "genfun";
    const BivariateGF gf = generating_function(job_.seq);
    body_["genfun"] = format(gf.value());

    stage_ = "telescope";
    tel_ = telescope(gf, job_.kernel, job_.options.max_order, exec_);
    Json t;
    t["order"] = tel_.order;
    t["operator"] = strings(tel_.opcoeffs, Var::t);
    t["certificate"] = format(tel_.certificate);
    body_["telescoper"] = t;
    check("certificate", verify_certificate(gf, job_.kernel, tel_),
          "sum a_i(t) D_t^i F = D_x(y F), checked by exact differentiation");

    if (!job_.alpha) return true;
    stage_ = "boundary";
    try {
      rhs_ = boundary_rhs(gf, job_.kernel, tel_, *job_.alpha, *job_.beta);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BoundaryNotEvaluable || !need_rhs) throw;
      if (!has_exact_oracle(job_.kernel)) throw;
      notes_.push_back(std::string("boundary term not evaluable (") + e.what() +
                       "); recurrence taken from the guessing path");
      body_["fallback"] = "guess";
      return false;
    }
    body_["boundary_rhs"] = format(rhs_, Var::t);
    return true;
  }

  std::vector<Rational> exact(int count) {
    stage_ = "oracle";
    if (static_cast<int>(exact_.size()) < count) exact_ = exact_terms(problem(), count, exec_);
    return std::vector<Rational>(exact_.begin(), exact_.begin() + count);
  }

  int guess_term_count() const {
    const Options& o = job_.options;
    return (o.max_order + 1) * (o.max_degree + 1) + o.max_order + o.margin;
  }

  // Returns the guess, or nullopt when nothing fits within the bounds.
  std::optional<Recurrence> guess_path(bool required) {
    if (!has_exact_oracle(job_.kernel)) {
      stage_ = "guess";
      throw Error(ErrorKind::ExactOracleUnavailable, "guessing needs exact terms, which require a polynomial kernel");
    }
    const int count = guess_term_count();
    const auto all = exact(std::max(count, kCrossCheckTerms));
    stage_ = "guess";
    const std::vector<Rational> fit(all.begin(), all.begin() + count);
    auto g = guess_precursive(fit, job_.options.max_order, job_.options.max_degree, job_.options.margin, exec_);
    if (!g) {
      if (required) throw NotFound{"no recurrence with order <= " + std::to_string(job_.options.max_order) +
                                   " and degree <= " + std::to_string(job_.options.max_degree) + " fits " +
                                   std::to_string(count) + " terms"};
      notes_.push_back("guessing found no recurrence within the order and degree bounds");
      return std::nullopt;
    }
    Json gj = describe_recurrence(*g);
    gj["terms_used"] = count;
    body_["guess"] = gj;
    check("guess_annihilates_oracle", annihilates(*g, all),
          "guessed recurrence annihilates exact oracle terms n = 0.." + std::to_string(all.size() - 1));
    return g;
  }

  void full_path() {
    const bool have_rhs = telescope_path(true);
    const bool exact_oracle = has_exact_oracle(job_.kernel);
    std::optional<Recurrence> rec;
    if (have_rhs) {
      stage_ = "recurrence";
      rec = ode_to_recurrence(tel_.opcoeffs, rhs_);
      body_["recurrence"] = describe_recurrence(*rec);
      stage_ = "initials";
      if (exact_oracle) {
        rec = exact_initials(*rec);
      } else {
        numeric_initials(*rec);
        rec.reset();
      }
    }
    if (!exact_oracle) return;
    const auto g = guess_path(!have_rhs);
    if (!g || !rec) return;
    stage_ = "cross_check";
    const int n = kCrossCheckTerms;
    const auto tel_terms = unroll(*rec, n);
    const auto guess_terms = unroll(*g, n);
    const std::string upto = "n = 0.." + std::to_string(n - 1);
    check("guess_annihilates_telescoper_terms", annihilates(*g, tel_terms),
          "guessed recurrence annihilates the unrolled telescoper recurrence, " + upto);
    check("telescoper_annihilates_guess_terms", annihilates(*rec, guess_terms),
          "telescoper recurrence annihilates the unrolled guessed recurrence, " + upto);
  }

  std::optional<Recurrence> exact_initials(const Recurrence& rec) {
    const int checked = job_.task == Task::verify ? kCrossCheckTerms : kOracleCheckTerms;
    const int count = std::max(checked, required_initials(rec));
    const auto oracle = exact(count);
    stage_ = "initials";
    const std::string range = "n = 0.." + std::to_string(count - 1);
    Recurrence full;
    try {
      full = attach_initials(rec, oracle);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RecurrenceRefuted) throw;
      check("telescoper_annihilates_oracle", false, std::string(e.what()) + ", " + range);
      return std::nullopt;
    }
    body_["recurrence"]["initial_terms"] = strings(full.initial_terms);
    check("telescoper_annihilates_oracle", true,
          "recurrence and its low-order equations hold on exact oracle terms " + range);
    check("unrolled_matches_oracle", unroll(full, count) == oracle,
          "recurrence unrolled from its initial terms reproduces the oracle, " + range);
    return full;
  }

  void numeric_initials(const Recurrence& rec) {
    const int need = required_initials(rec);
    const int count = need + 10;
    stage_ = "oracle";
    const auto seeds = numeric_terms(problem(), count, job_.options.precision, exec_);
    stage_ = "initials";
    const auto unrolled = unroll_numeric(rec, seeds, count);
    BigFloat deviation = 0;
    for (int k = 0; k < count; ++k) {
      const auto i = static_cast<std::size_t>(k);
      const BigFloat scale = std::max(BigFloat(1), BigFloat(abs(seeds[i])));
      deviation = std::max(deviation, BigFloat(abs(unrolled[i] - seeds[i]) / scale));
    }
    const BigFloat residual = max_residual(rec, seeds);
    Json seeds_json = Json::array();
    for (int k = 0; k < need; ++k) seeds_json.push_back(approx(seeds[static_cast<std::size_t>(k)]));
    body_["recurrence"].erase("initial_terms");
    body_["recurrence"]["approx"] = {{"initial_terms", seeds_json}};
    const std::string range = "n = 0.." + std::to_string(count - 1);
    Json& c = check("numeric_consistency", residual <= kNumericTolerance && deviation <= kNumericTolerance,
                    "recurrence unrolled from quadrature seeds agrees with quadrature, " + range +
                        ", tolerance 1e-8 (relative above magnitude 1)");
    c["approx"] = {{"max_residual", approx(residual)}, {"max_deviation", approx(deviation)}};
  }

  const Job& job_;
  Exec exec_;
  Json body_ = Json::object();
  Json verifications_ = Json::array();
  Json notes_ = Json::array();
  Exit exit_ = Exit::ok;
  std::string stage_ = "input";
  Telescoper tel_;
  URatFunc rhs_;
  std::vector<Rational> exact_;
};

}  // namespace

Report run(const Job& job, Exec exec) { return Runner(job, exec).go(); }

Report run_text(const std::string& job_text, const OptionOverrides& overrides, Exec exec) {
  Job job;
  try {
    job = parse_job_text(job_text, overrides);
  } catch (const Error& e) {
    Report r;
    r.exit = Exit::input_error;
    r.body["error"] = {{"stage", "input"}, {"kind", to_string(e.kind())}, {"message", e.what()}};
    r.body["verifications"] = Json::array();
    r.body["status"] = status_name(r.exit);
    r.body["exit_code"] = static_cast<int>(r.exit);
    return r;
  }
  return run(job, exec);
}

// ---------------------------------------------------------------------------

namespace {

void text_recurrence(std::ostringstream& os, const Json& r) {
  os << "  ";
  bool first = true;
  for (std::size_t i = 0; i < r["coeffs"].size(); ++i) {
    const auto c = r["coeffs"][i].get<std::string>();
    if (c == "0") continue;
    os << (first ? "" : " + ") << "(" << c << ")*a(n" << (i ? "+" + std::to_string(i) : "") << ")";
    first = false;
  }
  os << " = 0   for n >= " << r["threshold"].get<int>() << "\n";
  for (const auto& e : r["exceptional"]) {
    os << "  ";
    for (std::size_t i = 0; i < e["index"].size(); ++i)
      os << (i ? " + " : "") << "(" << e["coeffs"][i].get<std::string>() << ")*a(" << e["index"][i].get<int>() << ")";
    if (e["index"].empty()) os << "0";
    os << " = " << e["value"].get<std::string>() << "\n";
  }
  if (!r["singular"].empty()) os << "  leading coefficient vanishes at n = " << r["singular"].dump() << "\n";
  const Json& init = r.contains("approx") ? r["approx"]["initial_terms"] : r["initial_terms"];
  if (!init.empty()) {
    os << "  initial terms" << (r.contains("approx") ? " (approx)" : "") << ":";
    for (std::size_t k = 0; k < init.size(); ++k) os << (k ? "," : "") << " a(" << k << ") = " << init[k].get<std::string>();
    os << "\n";
  }
}

std::string emit_text(const Json& b) {
  std::ostringstream os;
  if (b.contains("task")) os << "task: " << b["task"].get<std::string>() << "\n";
  if (b.contains("input")) {
    const Json& s = b["input"]["sequence"];
    os << "sequence: order " << s["order"].get<int>() << ", coeffs " << s["coeffs"].dump() << ", init " << s["init"].dump()
       << "\n";
    const Json& k = b["input"]["kernel"];
    os << "kernel: " << k["type"].get<std::string>() << ", prefactor " << k["prefactor"].get<std::string>();
    if (k.contains("logderiv")) os << ", logderiv " << k["logderiv"].get<std::string>();
    os << "\n";
    if (b["input"].contains("interval"))
      os << "interval: [" << b["input"]["interval"][0].get<std::string>() << ", "
         << b["input"]["interval"][1].get<std::string>() << "]\n";
  }
  if (b.contains("genfun")) os << "generating function: " << b["genfun"].get<std::string>() << "\n";
  if (b.contains("terms")) {
    os << "terms:\n";
    for (std::size_t n = 0; n < b["terms"].size(); ++n) os << "  P_" << n << "(x) = " << b["terms"][n].get<std::string>() << "\n";
  }
  if (b.contains("telescoper")) {
    const Json& t = b["telescoper"];
    os << "telescoper (order " << t["order"].get<int>() << "):\n";
    for (std::size_t i = 0; i < t["operator"].size(); ++i)
      os << "  a_" << i << "(t) = " << t["operator"][i].get<std::string>() << "\n";
    os << "  certificate multiplier y = " << t["certificate"].get<std::string>() << "\n";
  }
  if (b.contains("boundary_rhs")) os << "boundary rhs: " << b["boundary_rhs"].get<std::string>() << "\n";
  if (b.contains("recurrence")) {
    os << "recurrence (telescoper path):\n";
    text_recurrence(os, b["recurrence"]);
  }
  if (b.contains("guess")) {
    os << "recurrence (guessing path, " << b["guess"]["terms_used"].get<int>() << " terms):\n";
    text_recurrence(os, b["guess"]);
  }
  if (b.contains("notes"))
    for (const auto& n : b["notes"]) os << "note: " << n.get<std::string>() << "\n";
  os << "verifications:" << (b["verifications"].empty() ? " none\n" : "\n");
  for (const auto& v : b["verifications"]) {
    os << "  [" << (v["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << v["check"].get<std::string>() << ": "
       << v["detail"].get<std::string>();
    if (v.contains("approx"))
      os << " (max residual " << v["approx"]["max_residual"].get<std::string>() << ", max deviation "
         << v["approx"]["max_deviation"].get<std::string>() << ")";
    os << "\n";
  }
  if (b.contains("error")) {
    const Json& e = b["error"];
    os << "error in stage " << e["stage"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
  }
  os << "status: " << b["status"].get<std::string>() << " (exit " << b["exit_code"].get<int>() << ")\n";
  return os.str();
}

}  // namespace

std::string emit(const Report& report, Format format) {
  if (format == Format::json) return report.body.dump(2) + "\n";
  return emit_text(report.body);
}

// ---------------------------------------------------------------------------

std::vector<EmbeddedExpression> embedded_expressions(const Json& body) {
  std::vector<EmbeddedExpression> out;
  const auto one = [&](const Json& parent, const std::string& path, const char* key, const char* vars) {
    if (parent.is_object() && parent.contains(key) && parent[key].is_string())
      out.push_back({path + "/" + key, parent[key].get<std::string>(), vars});
  };
  const auto list = [&](const Json& parent, const std::string& path, const char* key, const char* vars) {
    if (!parent.is_object() || !parent.contains(key) || !parent[key].is_array()) return;
    const Json& a = parent[key];
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].is_string()) out.push_back({path + "/" + key + "/" + std::to_string(i), a[i].get<std::string>(), vars});
  };
  const auto recurrence = [&](const Json& r, const std::string& path) {
    list(r, path, "coeffs", "n");
    list(r, path, "initial_terms", "");
    if (!r.contains("exceptional")) return;
    for (std::size_t i = 0; i < r["exceptional"].size(); ++i) {
      const std::string p = path + "/exceptional/" + std::to_string(i);
      list(r["exceptional"][i], p, "coeffs", "");
      one(r["exceptional"][i], p, "value", "");
    }
  };
  if (body.contains("input")) {
    const Json& in = body["input"];
    if (in.contains("sequence")) {
      list(in["sequence"], "/input/sequence", "coeffs", "x");
      list(in["sequence"], "/input/sequence", "init", "x");
    }
    if (in.contains("kernel")) {
      one(in["kernel"], "/input/kernel", "prefactor", "x");
      one(in["kernel"], "/input/kernel", "logderiv", "x");
    }
    list(in, "/input", "interval", "");
  }
  one(body, "", "genfun", "xt");
  list(body, "", "terms", "x");
  if (body.contains("telescoper")) {
    list(body["telescoper"], "/telescoper", "operator", "t");
    one(body["telescoper"], "/telescoper", "certificate", "xt");
  }
  one(body, "", "boundary_rhs", "t");
  if (body.contains("recurrence")) recurrence(body["recurrence"], "/recurrence");
  if (body.contains("guess")) recurrence(body["guess"], "/guess");
  return out;
}

std::vector<std::string> round_trip_failures(const Json& body) {
  std::vector<std::string> bad_paths;
  for (const auto& e : embedded_expressions(body)) {
    try {
      std::string again;
      const std::string vars = e.vars;
      if (vars == "xt") {
        again = format(lower(parse(e.text, {Var::x, Var::t})));
      } else if (vars.empty()) {
        again = format(lower(parse(e.text, {})));
      } else {
        const Var v = vars == "x" ? Var::x : (vars == "t" ? Var::t : Var::n);
        again = format(parse_univariate(e.text, v), v);
      }
      if (again != e.text) bad_paths.push_back(e.path);
    } catch (const Error&) {
      bad_paths.push_back(e.path);
    }
  }
  return bad_paths;
}

}  // namespace cfint
