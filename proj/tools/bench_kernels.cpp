// Serial reference vs OpenMP kernels: wall time and agreement.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "cfint/genfun.hpp"
#include "cfint/linalg.hpp"
#include "cfint/oracle.hpp"
#include "cfint/telescoper.hpp"

using namespace cfint;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto s = std::chrono::steady_clock::now();
    f();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

template <class F>
void compare(const char* name, F&& kernel, int reps) {
  decltype(kernel(Exec::serial)) a, b;
  const double ts = seconds([&] { a = kernel(Exec::serial); }, reps);
  const double tp = seconds([&] { b = kernel(Exec::parallel); }, reps);
  std::printf("%-38s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
              a == b ? "same result" : "RESULTS DIFFER");
}

// rows x cols with planted rank.
Matrix<Rational> low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
  std::uniform_int_distribution<long> d(-9, 9);
  Matrix<Rational> a(rows, rank), b(rank, cols), m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rank; ++k) a(i, k) = Rational(d(rng));
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = Rational(d(rng));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < rank; ++k) m(i, j) += a(i, k) * b(k, j);
  return m;
}

Matrix<UPoly> poly_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> d(-5, 5);
  Matrix<UPoly> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = UPoly(std::vector<Rational>{d(rng), d(rng), d(rng)});
  return m;
}

}  // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(7);

  const auto q = low_rank(rng, 80, 90, 70);
  compare("bareiss nullspace, Q, 80x90", [&](Exec e) { return nullspace_rational(q, e); }, 3);

  const auto p = poly_matrix(rng, 14, 16);
  compare("bareiss nullspace, Q[t], 14x16", [&](Exec e) { return nullspace(p, e); }, 3);

  const IntegralProblem cube{power(chebyshev_t(), 3), trivial_kernel(), Rational(-1), Rational(1)};
  compare("exact oracle, T^3, 120 terms", [&](Exec e) { return exact_terms(cube, 120, e); }, 3);

  const IntegralProblem weighted{power(chebyshev_t(), 2), chebyshev_weight(), Rational(-1), Rational(1)};
  compare("tanh-sinh oracle, T^2/sqrt, 24 terms", [&](Exec e) { return numeric_terms(weighted, 24, 30, e); }, 3);

  const BivariateGF gf = generating_function(power(chebyshev_t(), 3));
  compare("telescope T^3, trivial kernel", [&](Exec e) { return telescope(gf, trivial_kernel(), 6, e); }, 3);
  return 0;
}
