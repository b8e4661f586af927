#pragma once

#include <optional>
#include <vector>

#include "pdedim/symbolic.hpp"

namespace pdedim {

// Grid of Spencer cohomology dimensions h^{i,j} over a computed window.
// Entries outside the window are never guessed; vanished_beyond, when set, is
// the last degree with a nonzero row (all computed rows above it are zero).
struct SpencerTable {
  int n = 0;
  int i_max = -1;
  std::vector<std::vector<long long>> h;  // h[i][j], 0 <= i <= i_max, 0 <= j <= n
  std::optional<int> vanished_beyond;

  long long at(int i, int j) const { return h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  bool row_zero(int i) const {
    for (long long v : h[static_cast<std::size_t>(i)])
      if (v != 0) return false;
    return true;
  }
};

// Matrix of delta : g_i (x) Lambda^j -> S^{i-1}T* (x) N (x) Lambda^{j+1} in the
// canonical bases. delta(w (x) al) = sum_a (delta_{e_a} w) (x) (e_a^* ^ al),
// with wedge sign (-1)^{#{elements of al smaller than a}}. The image lands in
// g_{i-1} (x) Lambda^{j+1}; the matrix is expressed in ambient coordinates.
// Domain index = (basis row of g_i) * nwedge + wedge rank.
inline Matrix delta_matrix(const SymbolicSystem& sys, int i, int j) {
  const int n = sys.n(), m = sys.m();
  if (j < 0 || j > n) throw DimensionMismatch("delta_matrix: bad wedge degree");
  const Subspace& gi = sys.component(i);
  std::vector<std::vector<int>> wedges = enumerate_wedge(n, j);
  const int nw = static_cast<int>(wedges.size());
  const int dom = gi.dim() * nw;
  if (i == 0 || j == n) return Matrix(0, dom);  // zero map
  JetBasis src(n, m, i), dst(n, m, i - 1, j + 1);
  Matrix d(static_cast<int>(dst.size()), dom);
  for (int row = 0; row < gi.dim(); ++row) {
    for (int w = 0; w < nw; ++w) {
      const std::vector<int>& W = wedges[static_cast<std::size_t>(w)];
      const int col = row * nw + w;
      for (int a = 0; a < n; ++a) {
        int below = 0;
        bool in = false;
        for (int x : W) {
          if (x == a) in = true;
          if (x < a) ++below;
        }
        if (in) continue;
        const int sign = (below % 2 == 0) ? 1 : -1;
        std::vector<int> Wa = W;
        Wa.insert(Wa.begin() + below, a);
        const int wr = dst.wedge_rank.at(Wa);
        // delta_{e_a} of the basis row, coordinate by coordinate.
        for (std::size_t mi = 0; mi < src.monomials.size(); ++mi) {
          const MultiIndex& alpha = src.monomials[mi];
          const int e = alpha[static_cast<std::size_t>(a)];
          if (e == 0) continue;
          MultiIndex beta = alpha;
          --beta[static_cast<std::size_t>(a)];
          const long long bi = monomial_rank(beta);
          for (int dep = 0; dep < m; ++dep) {
            const Rational& c =
                gi.basis.at(row, static_cast<int>(src.index(static_cast<long long>(mi), dep)));
            if (c == 0) continue;
            d.at(static_cast<int>(dst.index(bi, dep, wr)), col) += c * e * sign;
          }
        }
      }
    }
  }
  return d;
}

// h^{i,j} = dim(g_i (x) Lambda^j) - rank delta_out(i,j) - rank delta_in(i+1,j-1).
inline long long cohomology_dim(const SymbolicSystem& sys, int i, int j) {
  const int n = sys.n();
  long long dim = sys.component(i).dim() * binomial(BigInt(n), j).get_si();
  long long out = (j < n) ? rank(delta_matrix(sys, i, j)) : 0;
  long long in = (j >= 1) ? rank(delta_matrix(sys, i + 1, j - 1)) : 0;
  return dim - out - in;
}

inline SpencerTable spencer_table(const SymbolicSystem& sys, int i_max) {
  const int n = sys.n();
  SpencerTable t;
  t.n = n;
  t.i_max = i_max;
  // rank cache: rk[i][j] = rank of delta on g_i (x) Lambda^j, i <= i_max + 1.
  std::vector<std::vector<long long>> rk(static_cast<std::size_t>(i_max + 2),
                                         std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= i_max + 1; ++i)
    for (int j = 0; j < n; ++j) {
      if (sys.component(i).dim() == 0) continue;
      rk[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rank(delta_matrix(sys, i, j));
    }
  t.h.assign(static_cast<std::size_t>(i_max + 1),
             std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= i_max; ++i)
    for (int j = 0; j <= n; ++j) {
      long long dim = sys.component(i).dim() * binomial(BigInt(n), j).get_si();
      long long out = (j < n) ? rk[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] : 0;
      long long in =
          (j >= 1) ? rk[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j - 1)] : 0;
      t.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dim - out - in;
    }
  int last_nonzero = 0;
  for (int i = i_max; i >= 0; --i)
    if (!t.row_zero(i)) {
      last_nonzero = i;
      break;
    }
  if (last_nonzero < i_max) t.vanished_beyond = last_nonzero;
  return t;
}

}  // namespace pdedim
