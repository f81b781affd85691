#include "cfint/guesser.hpp"

namespace cfint {

namespace {

// Row n: coefficients of g_ij, ordered i-major, n^j a(n+i).
std::vector<Rational> window_row(const std::vector<Rational>& terms, long n, int order, int degree) {
  std::vector<Rational> row;
  for (int i = 0; i <= order; ++i) {
    Rational nj(1);
    for (int j = 0; j <= degree; ++j) {
      row.push_back(nj * terms[static_cast<std::size_t>(n + i)]);
      nj *= Rational(n);
    }
  }
  return row;
}

std::vector<UPoly> to_coeffs(const std::vector<Rational>& v, int order, int degree) {
  std::vector<UPoly> c;
  for (int i = 0; i <= order; ++i) {
    const auto first = v.begin() + static_cast<long>(i) * (degree + 1);
    c.emplace_back(std::vector<Rational>(first, first + degree + 1));
  }
  return c;
}

std::optional<Recurrence> try_cell(const std::vector<Rational>& terms, int order, int degree, int margin, Exec exec) {
  const long windows = static_cast<long>(terms.size()) - order;
  const long fit = windows - margin;
  const auto unknowns = static_cast<std::size_t>((order + 1) * (degree + 1));
  Matrix<Rational> m(static_cast<std::size_t>(fit), unknowns);
  for (long n = 0; n < fit; ++n) {
    const auto row = window_row(terms, n, order, degree);
    for (std::size_t c = 0; c < unknowns; ++c) m(static_cast<std::size_t>(n), c) = row[c];
  }
  for (const auto& v : nullspace_rational(m, exec)) {
    const auto coeffs = to_coeffs(v, order, degree);
    bool zero_operator = true;
    for (const auto& c : coeffs) zero_operator = zero_operator && c.is_zero();
    if (zero_operator) continue;
    Recurrence raw;
    raw.order = order;
    raw.coeffs = coeffs;
    raw.threshold = 0;
    if (!annihilates(raw, terms)) continue;
    Recurrence rec = make_recurrence(coeffs, 0);
    if (required_initials(rec) > static_cast<int>(terms.size())) continue;
    try {
      return attach_initials(rec, terms);
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace

bool guess_cell_feasible(int terms, int order, int degree, int margin) {
  return terms - order - margin >= (order + 1) * (degree + 1) - 1;
}

std::optional<Recurrence> guess_precursive(const std::vector<Rational>& terms, int max_order, int max_degree,
                                           int margin, Exec exec) {
  if (max_order < 1 || max_degree < 0 || margin < 0)
    throw Error(ErrorKind::InvalidInput, "guessing bounds must be positive");
  const int size = static_cast<int>(terms.size());
  for (int r = 1; r <= max_order; ++r)
    for (int d = 0; d <= max_degree; ++d) {
      if (!guess_cell_feasible(size, r, d, margin)) continue;
      if (auto rec = try_cell(terms, r, d, margin, exec)) return rec;
    }
  return std::nullopt;
}

}  // namespace cfint
