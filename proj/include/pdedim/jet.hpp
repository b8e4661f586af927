#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "pdedim/rational.hpp"

namespace pdedim {

// Exponent vector of a monomial in n variables.
using MultiIndex = std::vector<int>;

inline int degree(const MultiIndex& mi) {
  return std::accumulate(mi.begin(), mi.end(), 0);
}

// dim S^k T* for dim T = n; 0 for k < 0 (S^iT* = 0 below degree zero).
inline long long dim_sym(int n, int k) {
  if (k < 0) return 0;
  return binomial(BigInt(k + n - 1), k).get_si();
}

// Fiber dimension of the order-beta vertical jets: binom(beta+n, n).
inline long long dim_jet_fiber(int n, int beta) {
  if (beta < 0) return 0;
  return binomial(BigInt(beta + n), n).get_si();
}

namespace detail {
inline void enum_monomials_rec(int n, int k, MultiIndex& cur,
                               std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur.push_back(e);
    enum_monomials_rec(n, k - e, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// All degree-k monomials in graded-lex order (x_0 > x_1 > ...). This is THE
// canonical order used for subspace coordinates and serialized matrices.
inline std::vector<MultiIndex> enumerate_monomials(int n, int k) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  cur.reserve(static_cast<std::size_t>(n));
  detail::enum_monomials_rec(n, k, cur, out);
  return out;
}

// Position of a degree-k monomial within enumerate_monomials(n, k).
inline long long monomial_rank(const MultiIndex& mi) {
  int n = static_cast<int>(mi.size());
  int k = degree(mi);
  long long r = 0;
  for (int i = 0; i < n - 1; ++i) {
    for (int e = k; e > mi[static_cast<std::size_t>(i)]; --e)
      r += dim_sym(n - 1 - i, k - e);
    k -= mi[static_cast<std::size_t>(i)];
  }
  return r;
}

// All strictly increasing size-j subsets of [0, n), lexicographic.
inline std::vector<std::vector<int>> enumerate_wedge(int n, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == j) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Basis bookkeeping for S^kT* (x) N (x) Lambda^j T*. Linearization contract:
// dependent index slowest, then monomial (graded-lex), then wedge subset.
struct JetBasis {
  int n, m, k, j;
  std::vector<MultiIndex> monomials;
  std::vector<std::vector<int>> wedges;
  std::map<std::vector<int>, int> wedge_rank;

  JetBasis(int n_, int m_, int k_, int j_ = 0)
      : n(n_), m(m_), k(k_), j(j_), monomials(enumerate_monomials(n_, k_)),
        wedges(enumerate_wedge(n_, j_)) {
    for (int i = 0; i < static_cast<int>(wedges.size()); ++i)
      wedge_rank[wedges[static_cast<std::size_t>(i)]] = i;
  }

  long long size() const {
    return static_cast<long long>(m) * static_cast<long long>(monomials.size()) *
           static_cast<long long>(wedges.size());
  }

  long long index(long long mono, int dep, int wedge = 0) const {
    return (static_cast<long long>(dep) * static_cast<long long>(monomials.size()) +
            mono) *
               static_cast<long long>(wedges.size()) +
           wedge;
  }

  long long index(const MultiIndex& mono, int dep) const {
    return index(monomial_rank(mono), dep);
  }
};

// Ambient dimension of S^kT* (x) N.
inline long long ambient_dim(int n, int m, int k) { return dim_sym(n, k) * m; }

}  // namespace pdedim
