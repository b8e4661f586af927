#pragma once

#include <map>
#include <string>
#include <vector>

#include "pdedim/symbolic.hpp"

namespace pdedim {

struct ConditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape data of a candidate generalized complete intersection.
struct GciProfile {
  int n = 0;
  int m = 0;
  int r = 0;                     // codim(g) = number of relations with multiplicity
  std::vector<int> orders;       // k_1..k_r
  int d = 1;                     // fiber dimension of the characteristic sheaf
};

inline void check_gci_range(const GciProfile& p) {
  if (p.r != static_cast<int>(p.orders.size()))
    throw ConditionViolated("gci: r must equal the number of orders");
  if (p.d < 1) throw ConditionViolated("gci: d must be >= 1");
  if (!(p.m <= p.r && p.r < p.n + p.m))
    throw ConditionViolated("gci: need m <= r < n + m (got m=" + std::to_string(p.m) +
                            ", r=" + std::to_string(p.r) + ", n=" + std::to_string(p.n) +
                            ")");
}

// Functional dimension p = m + n - r - 1.
inline int gci_dimension(const GciProfile& p) {
  check_gci_range(p);
  return p.m + p.n - p.r - 1;
}

// Functional rank sigma = d * S_{r-m+1}(k_1, ..., k_r).
inline long long gci_rank(const GciProfile& p) {
  check_gci_range(p);
  std::vector<long long> ks(p.orders.begin(), p.orders.end());
  return p.d * elementary_symmetric(p.r - p.m + 1, ks).get_si();
}

struct GciClassification {
  bool is_gci = false;
  bool range_ok = false;       // m <= r < n + m
  bool char_codim_ok = false;  // n - p = r - m + 1
  bool fiber_dim_assumed = true;  // dim K_x = d is assumed, not verified
  int r = 0;
  std::string detail;
};

// Symbol-level GCI classification; r is codim(g) from the order profile and p
// the Hilbert functional dimension. The fiber condition dim K_x = 1 needs
// module localization and is reported as an assumption.
inline GciClassification classify_gci(int n, int m, long long codim, int hilbert_p) {
  GciClassification c;
  c.r = static_cast<int>(codim);
  c.range_ok = (m <= c.r && c.r < n + m);
  c.char_codim_ok = (n - hilbert_p == c.r - m + 1);
  c.is_gci = c.range_ok && c.char_codim_ok;
  c.detail = "m<=r<n+m: " + std::string(c.range_ok ? "yes" : "no") +
             "; codim Char = r-m+1: " + std::string(c.char_codim_ok ? "yes" : "no") +
             "; dim K_x = d: assumed";
  return c;
}

// Homogeneous polynomial in n variables, monomial -> coefficient.
using MultiPoly = std::map<MultiIndex, Rational>;

// m x r matrix of homogeneous polynomial symbols; column j homogeneous of
// degree orders[j].
struct PolySymbolMatrix {
  int n = 0;
  int m = 0;
  int r = 0;
  std::vector<int> orders;               // per column
  std::vector<std::vector<MultiPoly>> e; // e[row][col]

  const MultiPoly& at(int row, int col) const {
    return e[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
};

// Column i = symbols of equation i split by dependent variable.
inline PolySymbolMatrix symbol_matrix(const SymbolicSystem& sys) {
  PolySymbolMatrix M;
  M.n = sys.n();
  M.m = sys.m();
  M.r = static_cast<int>(sys.equations().size());
  M.e.assign(static_cast<std::size_t>(M.m),
             std::vector<MultiPoly>(static_cast<std::size_t>(M.r)));
  for (int col = 0; col < M.r; ++col) {
    const EquationSymbol& eq = sys.equations()[static_cast<std::size_t>(col)];
    M.orders.push_back(eq.order);
    for (const auto& [key, coeff] : eq.terms)
      if (coeff != 0) M.e[static_cast<std::size_t>(key.second)][static_cast<std::size_t>(col)][key.first] = coeff;
  }
  return M;
}

namespace detail {
inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      MultiIndex m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline void poly_add_scaled(MultiPoly& a, const MultiPoly& b, int sign) {
  for (const auto& [mb, cb] : b) {
    a[mb] += sign > 0 ? cb : -cb;
    if (a[mb] == 0) a.erase(mb);
  }
}

// Cofactor expansion along the first row; sizes here are tiny.
inline MultiPoly poly_det(const std::vector<std::vector<const MultiPoly*>>& m) {
  const int sz = static_cast<int>(m.size());
  if (sz == 1) return *m[0][0];
  MultiPoly det;
  for (int c = 0; c < sz; ++c) {
    if (m[0][static_cast<std::size_t>(c)]->empty()) continue;
    std::vector<std::vector<const MultiPoly*>> sub;
    for (int r = 1; r < sz; ++r) {
      std::vector<const MultiPoly*> row;
      for (int cc = 0; cc < sz; ++cc)
        if (cc != c) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)]);
      sub.push_back(std::move(row));
    }
    poly_add_scaled(det, poly_mul(*m[0][static_cast<std::size_t>(c)], poly_det(sub)),
                    c % 2 == 0 ? 1 : -1);
  }
  return det;
}
}  // namespace detail

// All binom(r, m) maximal minors of the symbol matrix (generators of the zero
// Fitting ideal), each of degree = sum of the chosen column degrees.
inline std::vector<MultiPoly> fitting_minors(const PolySymbolMatrix& M) {
  if (M.m > M.r) throw ConditionViolated("fitting_minors: need m <= r");
  std::vector<MultiPoly> minors;
  for (const std::vector<int>& cols : enumerate_wedge(M.r, M.m)) {
    std::vector<std::vector<const MultiPoly*>> sub;
    for (int row = 0; row < M.m; ++row) {
      std::vector<const MultiPoly*> rr;
      for (int c : cols) rr.push_back(&M.at(row, c));
      sub.push_back(std::move(rr));
    }
    minors.push_back(detail::poly_det(sub));
  }
  return minors;
}

// Exact verification of the combinatorial identity behind the rank count for
// pure-order generalized complete intersections with r = n + m - 1.
inline bool lemma_check(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) throw std::invalid_argument("lemma_check: bad args");
  BigInt lhs = BigInt(m) * binomial(big(n + static_cast<long long>(k) * (n + m - 1)), n) -
               BigInt(n + m - 1) * binomial(big(n + static_cast<long long>(k) * (n + m - 2)), n);
  for (int j = 1; j <= n - 1; ++j) {
    BigInt term = binomial(BigInt(j + m - 2), m - 1) * binomial(BigInt(n + m - 1), j + m) *
                  binomial(big(static_cast<long long>(k + 1) * n -
                                 static_cast<long long>(k) * (1 + j)),
                           n);
    if (j % 2 != 0)
      lhs += term;
    else
      lhs -= term;
  }
  BigInt kn;
  mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(n));
  BigInt rhs = binomial(BigInt(n + m - 1), n) * kn;
  return lhs == rhs;
}

}  // namespace pdedim
