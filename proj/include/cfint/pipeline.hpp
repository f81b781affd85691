#pragma once

// Jobs and reports for the command-line front end.
//
// A job is one JSON document:
//
//   {
//     "sequence":   {"builtin": "chebyshev_T"}
//                 | {"coeffs": ["2*x", "-1"], "init": ["1", "x"]},
//     "transforms": [{"power": 2}, {"product": <sequence>}, "reverse"],
//     "kernel":     {"type": "trivial"}
//                 | {"type": "polynomial", "expr": "1-x^2"}
//                 | {"type": "rational", "expr": "1/(2+x)"}
//                 | {"type": "hyperexponential", "prefactor": "1",
//                    "logderiv": "x/(1-x^2)", "form": "chebyshev" | "power"},
//     "interval":   ["-1", "1"],
//     "task":       "genfun" | "terms" | "telescope" | "recurrence" | "guess" | "verify",
//     "count":      4,
//     "options":    {"max_order": 6, "max_degree": 4, "precision": 30, "margin": 8}
//   }
//
// Only "sequence" and "task" are always required; "interval" is required by
// every task that integrates. Expressions use the parser grammar.

#include <json.hpp>
#include <optional>
#include <string>

#include "cfint/cfinite.hpp"
#include "cfint/kernel.hpp"
#include "cfint/linalg.hpp"

namespace cfint {

using Json = nlohmann::ordered_json;

struct Options {
  int max_order = 6;
  int max_degree = 4;
  int precision = 30;
  int margin = 8;
};

// Values set on the command line win over the job file.
struct OptionOverrides {
  std::optional<int> max_order, max_degree, precision, margin;
};

enum class Task { genfun, terms, telescope, recurrence, guess, verify };

struct Job {
  CFiniteSeq seq = constant_one();
  Kernel kernel;
  std::string kernel_form;  // "", "chebyshev" or "power"
  std::optional<Rational> alpha, beta;
  Task task = Task::genfun;
  int count = 0;
  Options options;
};

// Throws InvalidInput (or a parser error) on malformed jobs.
Job parse_job(const Json& doc, const OptionOverrides& overrides = {});
Job parse_job_text(const std::string& text, const OptionOverrides& overrides = {});

enum class Exit { ok = 0, verification_failed = 1, input_error = 2, not_found = 3 };

struct Report {
  Json body;
  Exit exit = Exit::ok;
};

Report run(const Job& job, Exec exec = Exec::parallel);

// Parses and runs; malformed jobs give a report with stage "input" and exit 2.
Report run_text(const std::string& job_text, const OptionOverrides& overrides = {}, Exec exec = Exec::parallel);

enum class Format { text, json };
std::string emit(const Report& report, Format format);

// Every expression string in a report, with the variables it may use.
struct EmbeddedExpression {
  std::string path;
  std::string text;
  std::string vars;  // subset of "xtn"
};
std::vector<EmbeddedExpression> embedded_expressions(const Json& body);

// Re-parses each embedded expression and checks that printing the value
// reproduces the text; returns the paths that fail.
std::vector<std::string> round_trip_failures(const Json& body);

// Relative agreement demanded of numerically validated values.
inline constexpr double kNumericTolerance = 1e-8;

// Oracle range checked exactly by the telescoper path, and the range of the
// mutual check between the telescoper and guessed recurrences.
inline constexpr int kOracleCheckTerms = 31;
inline constexpr int kCrossCheckTerms = 51;

}  // namespace cfint
