#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cfint/acceptance.hpp"
#include "cfint/format.hpp"
#include "cfint/genfun.hpp"
#include "cfint/pipeline.hpp"
#include "cfint/telescoper.hpp"

using namespace cfint;

namespace {

int write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return static_cast<int>(Exit::input_error);
  }
  out << text;
  return 0;
}

int cmd_run(const std::string& job_path, const std::string& fmt, const std::string& out_path,
            const OptionOverrides& over, bool serial) {
  std::string text;
  if (job_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(job_path, std::ios::binary);
    if (!in) {
      std::cerr << "cannot read job file " << job_path << "\n";
      return static_cast<int>(Exit::input_error);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const Report rep = run_text(text, over, serial ? Exec::serial : Exec::parallel);
  if (const int rc = write_out(emit(rep, fmt == "json" ? Format::json : Format::text), out_path)) return rc;
  return static_cast<int>(rep.exit);
}

int cmd_selftest(const std::vector<int>& only, bool serial) {
  const Exec exec = serial ? Exec::serial : Exec::parallel;
  bool ok = true;
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= 8; ++i) ids.push_back(i);
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, exec);
    std::cout << summary_line(r) << std::endl;
    ok = ok && r.passed;
  }
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? 0 : static_cast<int>(Exit::verification_failed);
}

// Random sequences through telescope + verify_certificate.
int cmd_fuzz(std::uint64_t seed, int count, int max_order) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto poly = [&] {
    std::vector<Rational> c;
    const long d = uniform(0, 1);
    for (long i = 0; i <= d; ++i) c.push_back(Rational(uniform(-3, 3)));
    return UPoly(std::move(c));
  };
  int telescoped = 0;
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const int order = static_cast<int>(uniform(1, 2));
    std::vector<UPoly> coeffs;
    std::vector<UPoly> init;
    for (int k = 0; k < order; ++k) coeffs.push_back(poly());
    while (coeffs.back().is_zero()) coeffs.back() = poly();
    for (int k = 0; k < order; ++k) init.push_back(poly());
    const CFiniteSeq seq(coeffs, init);
    const BivariateGF gf = generating_function(seq);
    try {
      const Telescoper tel = telescope(gf, trivial_kernel(), max_order);
      ++telescoped;
      if (!verify_certificate(gf, trivial_kernel(), tel)) {
        ++failures;
        std::cout << "counterexample: R = " << format(gf.value()) << "\n";
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoTelescoperFound) throw;
    } catch (const std::logic_error& e) {
      ++failures;
      std::cout << "counterexample: R = " << format(gf.value()) << " (" << e.what() << ")\n";
    }
  }
  std::cout << "seed " << seed << ": " << count << " sequences, " << telescoped << " telescoped, " << failures
            << " counterexamples\n";
  return failures == 0 ? 0 : static_cast<int>(Exit::verification_failed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cfint: recurrences for integrals of C-finite polynomial sequences"};
  app.require_subcommand(1);

  std::string job_path;
  std::string fmt = "text";
  std::string out_path;
  OptionOverrides over;
  int max_order = 0, max_degree = 0, precision = 0, margin = 0;
  bool serial = false;
  auto* run = app.add_subcommand("run", "run a job file");
  run->add_option("--job", job_path, "job file (JSON), '-' for stdin")->required();
  run->add_option("--format", fmt, "text or json")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--out", out_path, "write the report here instead of stdout");
  auto* o_order = run->add_option("--max-order", max_order, "largest telescoper and guess order (default 6)");
  auto* o_degree = run->add_option("--max-degree", max_degree, "largest guessed coefficient degree (default 4)");
  auto* o_prec = run->add_option("--precision", precision, "quadrature digits (default 30)");
  auto* o_margin = run->add_option("--margin", margin, "terms held out by the guesser (default 8)");
  run->add_flag("--serial", serial, "use the serial kernels");

  std::vector<int> only;
  auto* self = app.add_subcommand("selftest", "run the acceptance cases");
  self->add_option("--criterion", only, "run only these criteria (1-8)");
  self->add_flag("--serial", serial, "use the serial kernels");

  std::uint64_t seed = 1;
  int count = 200;
  int fuzz_order = 6;
  auto* fuzz = app.add_subcommand("fuzz", "telescope random sequences and verify every certificate");
  fuzz->add_option("--seed", seed, "random seed");
  fuzz->add_option("--count", count, "number of sequences");
  fuzz->add_option("--max-order", fuzz_order, "largest telescoper order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(Exit::input_error);
  }

  try {
    if (*run) {
      if (*o_order) over.max_order = max_order;
      if (*o_degree) over.max_degree = max_degree;
      if (*o_prec) over.precision = precision;
      if (*o_margin) over.margin = margin;
      return cmd_run(job_path, fmt, out_path, over, serial);
    }
    if (*self) return cmd_selftest(only, serial);
    if (*fuzz) return cmd_fuzz(seed, count, fuzz_order);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return static_cast<int>(Exit::input_error);
  }
  return 0;
}
