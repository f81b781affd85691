#pragma once

// Exact linear algebra over integral domains: fraction-free (Bareiss) row
// echelon form, determinant and right nullspace. Entries are Rational,
// UPoly (read as elements of Q(t)) or BPoly.
//
// Two variants of the elimination kernel exist: `Exec::parallel` updates the
// rows below each pivot in an OpenMP loop, `Exec::serial` is the reference
// implementation the tests compare against. Both produce identical output.

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "cfint/poly.hpp"
#include "cfint/ratfunc.hpp"

namespace cfint {

enum class Exec { serial, parallel };

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
struct Echelon {
  Matrix<T> m;
  std::vector<std::size_t> pivot_cols;  // pivot column of row k
  int swaps = 0;
};

namespace detail {

inline int pivot_weight(const Rational& r) {
  return static_cast<int>(mpz_sizeinbase(r.value().get_num_mpz_t(), 2));
}
template <class R>
int pivot_weight(const Poly<R>& p) {
  return p.degree();
}

template <class T>
void eliminate_row(Matrix<T>& a, std::size_t i, std::size_t r, std::size_t c, const T& prev) {
  if (is_zero(a(i, c))) {
    if (!(prev == T(1))) {
      // a(i, j) * pivot / prev for the remaining columns.
      const T& piv = a(r, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        if (!is_zero(a(i, j))) a(i, j) = exact_div(T(piv * a(i, j)), prev);
    } else {
      const T& piv = a(r, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        if (!is_zero(a(i, j))) a(i, j) = piv * a(i, j);
    }
    return;
  }
  const T& piv = a(r, c);
  const T lead = a(i, c);
  for (std::size_t j = c + 1; j < a.cols(); ++j) {
    T v = piv * a(i, j) - lead * a(r, j);
    a(i, j) = (prev == T(1)) ? std::move(v) : exact_div(v, prev);
  }
  a(i, c) = T();
}

}  // namespace detail

template <class T>
Echelon<T> bareiss_echelon(Matrix<T> a, Exec exec = Exec::parallel) {
  Echelon<T> out;
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      if (best == a.rows() || detail::pivot_weight(a(i, c)) < detail::pivot_weight(a(best, c))) best = i;
    }
    if (best == a.rows()) continue;
    if (best != r) {
      a.swap_rows(best, r);
      ++out.swaps;
    }
    const auto first = static_cast<long>(r + 1);
    const auto last = static_cast<long>(a.rows());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (long i = first; i < last; ++i) detail::eliminate_row(a, static_cast<std::size_t>(i), r, c, prev);
    } else {
      for (long i = first; i < last; ++i) detail::eliminate_row(a, static_cast<std::size_t>(i), r, c, prev);
    }
    prev = a(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(a);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& a, Exec exec = Exec::parallel) {
  return bareiss_echelon(a, exec).pivot_cols.size();
}

template <class T>
T determinant(const Matrix<T>& a, Exec exec = Exec::parallel) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  if (a.rows() == 0) return T(1);
  auto e = bareiss_echelon(a, exec);
  if (e.pivot_cols.size() < a.rows()) return T();
  T d = e.m(a.rows() - 1, a.cols() - 1);
  return e.swaps % 2 == 0 ? d : T(-d);
}

namespace detail {

template <class T>
void normalize_vector(std::vector<T>& v) {
  T g{};
  for (const auto& e : v) g = gcd(g, e);
  if (is_zero(g)) return;
  Rational sign(1);
  for (const auto& e : v) {
    if (!is_zero(e)) {
      if (lead_rational(e).sign() < 0) sign = Rational(-1);
      break;
    }
  }
  for (auto& e : v) e = scale(T(exact_div(e, g)), sign);
}

}  // namespace detail

// Basis of {v : a v = 0}. Each vector is primitive (entries share no common
// factor) with its first nonzero entry positive in the leading rational
// coefficient. Over UPoly entries the vectors span the nullspace over Q(t).
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a, Exec exec = Exec::parallel) {
  const auto e = bareiss_echelon(a, exec);
  const auto& m = e.m;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> x(a.cols());
    x[f] = T(1);
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      T s{};
      for (std::size_t j = pc + 1; j < a.cols(); ++j)
        if (!is_zero(m(k, j)) && !is_zero(x[j])) s += m(k, j) * x[j];
      if (is_zero(s)) continue;
      if constexpr (std::is_same_v<T, Rational>) {
        x[pc] = -(s / m(k, pc));
      } else {
        // Scale the partial solution so the pivot division stays exact.
        for (auto& xi : x)
          if (!is_zero(xi)) xi *= m(k, pc);
        x[pc] = -s;
        T g{};
        for (const auto& xi : x) g = gcd(g, xi);
        if (!(g == T(1)))
          for (auto& xi : x) xi = exact_div(xi, g);
      }
    }
    detail::normalize_vector(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Rows are cleared to integer coefficients before the fraction-free sweep.
std::vector<std::vector<Rational>> nullspace_rational(const Matrix<Rational>& a, Exec exec = Exec::parallel);

// Rows are multiplied by the lcm of their denominators, giving an equivalent
// polynomial system over Q[t].
std::vector<std::vector<UPoly>> nullspace_ratfunc(const Matrix<URatFunc>& a, Exec exec = Exec::parallel);

template <class T>
std::vector<T> multiply(const Matrix<T>& a, const std::vector<T>& v) {
  std::vector<T> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_zero(a(r, c)) && !is_zero(v[c])) out[r] += a(r, c) * v[c];
  return out;
}

}  // namespace cfint
