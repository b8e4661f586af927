#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "pdedim/rational.hpp"

namespace pdedim {

// Dense row-major matrix of exact rationals.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Matrix mul(const Matrix& o) const {
    if (cols != o.rows) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(rows, o.cols);
    for (int r = 0; r < rows; ++r)
      for (int k = 0; k < cols; ++k) {
        const Rational& x = at(r, k);
        if (x == 0) continue;
        for (int c = 0; c < o.cols; ++c)
          if (o.at(k, c) != 0) p.at(r, c) += x * o.at(k, c);
      }
    return p;
  }

  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

// Reduced row echelon form in place. Pivot = first nonzero entry in column
// order; no numeric heuristics needed with exact arithmetic. Returns pivot
// columns (their count is the rank).
inline std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < m.cols && lead < m.rows; ++c) {
    int pr = -1;
    for (int r = lead; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != lead)
      for (int k = c; k < m.cols; ++k) std::swap(m.at(pr, k), m.at(lead, k));
    {
      Rational inv = m.at(lead, c);
      for (int k = c; k < m.cols; ++k)
        if (m.at(lead, k) != 0) m.at(lead, k) /= inv;
    }
    for (int r = 0; r < m.rows; ++r) {
      if (r == lead) continue;
      const Rational f = m.at(r, c);
      if (f == 0) continue;
      for (int k = c; k < m.cols; ++k)
        if (m.at(lead, k) != 0) m.at(r, k) -= f * m.at(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(rref_in_place(m).size()); }

// A linear subspace in canonical form: basis rows are the unique RREF
// representative under the fixed column order, so equality of subspaces is
// equality of matrices.
struct Subspace {
  int ambient = 0;
  Matrix basis;  // dim x ambient, RREF, no zero rows

  int dim() const { return basis.rows; }

  static Subspace zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix(0, ambient);
    return s;
  }

  static Subspace full(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Matrix::identity(ambient);
    return s;
  }

  // Canonicalize an arbitrary spanning set (rows).
  static Subspace from_rows(Matrix rows) {
    Subspace s;
    s.ambient = rows.cols;
    int r = static_cast<int>(rref_in_place(rows).size());
    Matrix b(r, rows.cols);
    std::copy(rows.a.begin(), rows.a.begin() + static_cast<std::size_t>(r) * rows.cols,
              b.a.begin());
    s.basis = std::move(b);
    return s;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;
};

// Kernel {v : Mv = 0} with canonical basis; dim = cols - rank.
inline Subspace kernel_basis(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix basis(m.cols - static_cast<int>(pivots.size()), m.cols);
  int row = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis.at(row, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis.at(row, pivots[i]) = -r.at(static_cast<int>(i), f);
    ++row;
  }
  return Subspace::from_rows(std::move(basis));
}

// Functionals vanishing on the subspace, as rows (Euclidean-dual pairing).
inline Matrix annihilator(const Subspace& s) {
  return kernel_basis(s.basis).basis;
}

inline bool contains(const Subspace& s, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != s.ambient)
    throw DimensionMismatch("contains: vector length != ambient dimension");
  std::vector<Rational> w = v;
  // Reduce against RREF rows.
  for (int r = 0; r < s.basis.rows; ++r) {
    int p = -1;
    for (int c = 0; c < s.ambient; ++c)
      if (s.basis.at(r, c) != 0) {
        p = c;
        break;
      }
    assert(p >= 0);
    if (w[static_cast<std::size_t>(p)] == 0) continue;
    const Rational f = w[static_cast<std::size_t>(p)];
    for (int c = p; c < s.ambient; ++c)
      if (s.basis.at(r, c) != 0) w[static_cast<std::size_t>(c)] -= f * s.basis.at(r, c);
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw DimensionMismatch("intersect: ambient dimension mismatch");
  Matrix anna = annihilator(a);
  Matrix annb = annihilator(b);
  Matrix stacked(anna.rows + annb.rows, a.ambient);
  std::copy(anna.a.begin(), anna.a.end(), stacked.a.begin());
  std::copy(annb.a.begin(), annb.a.end(),
            stacked.a.begin() + static_cast<std::size_t>(anna.rows) * a.ambient);
  return kernel_basis(stacked);
}

// Sum of subspaces (used by tests for the dimension formula).
inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw DimensionMismatch("sum: ambient dimension mismatch");
  Matrix stacked(a.basis.rows + b.basis.rows, a.ambient);
  std::copy(a.basis.a.begin(), a.basis.a.end(), stacked.a.begin());
  std::copy(b.basis.a.begin(), b.basis.a.end(),
            stacked.a.begin() + static_cast<std::size_t>(a.basis.rows) * a.ambient);
  return Subspace::from_rows(std::move(stacked));
}

}  // namespace pdedim
