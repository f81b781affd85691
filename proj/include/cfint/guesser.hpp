#pragma once

// Fits sum_{i<=r} sum_{j<=d} g_ij n^j a(n+i) = 0 to exact terms. The linear
// system uses all windows except the last `margin`, which are held out and
// only used to verify the candidate.

#include <optional>
#include <vector>

#include "cfint/linalg.hpp"
#include "cfint/recurrence.hpp"

namespace cfint {

constexpr int kDefaultMargin = 8;

// Smallest (order, degree) in lexicographic order, initial terms attached.
// Cells with too few terms to overdetermine the fit are skipped.
std::optional<Recurrence> guess_precursive(const std::vector<Rational>& terms, int max_order, int max_degree,
                                           int margin = kDefaultMargin, Exec exec = Exec::parallel);

inline std::optional<Recurrence> guess_cfinite(const std::vector<Rational>& terms, int max_order,
                                               int margin = kDefaultMargin, Exec exec = Exec::parallel) {
  return guess_precursive(terms, max_order, 0, margin, exec);
}

// Whether the (order, degree) cell has enough windows to be tried.
bool guess_cell_feasible(int terms, int order, int degree, int margin);

}  // namespace cfint
