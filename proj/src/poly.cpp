#include "cfint/poly.hpp"

namespace cfint {

BPoly swap_variables(const BPoly& p) {
  const int inner = inner_degree(p);
  if (inner < 0) return {};
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(inner) + 1,
                                          std::vector<Rational>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j) rows[j][i] = p[i][j];
  std::vector<UPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return BPoly(std::move(out));
}

int inner_degree(const BPoly& p) {
  int d = -1;
  for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

int inner_root_multiplicity(const BPoly& p, const Rational& at) {
  if (p.is_zero()) return -1;
  int m = -1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    const int k = root_multiplicity(c, at);
    m = m < 0 ? k : std::min(m, k);
  }
  return m;
}

}  // namespace cfint
