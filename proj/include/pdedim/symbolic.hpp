#pragma once

#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "pdedim/jet.hpp"
#include "pdedim/linalg.hpp"

namespace pdedim {

struct InvalidSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Principal symbol of one scalar equation: a linear functional on S^rT* (x) N
// given by its coefficients in the monomial basis. Every key must have degree
// exactly r; lower-order terms do not belong in a graded symbol.
struct EquationSymbol {
  int order = 0;
  std::map<std::pair<MultiIndex, int>, Rational> terms;  // (monomial, dep) -> coeff
};

// delta_v : S^kT* (x) N -> S^{k-1}T* (x) N, the directional polynomial
// derivative; on x^alpha (x) e_j it is sum_a v_a alpha_a x^{alpha - 1_a} (x) e_j.
inline Matrix delta_dir_matrix(int n, int m, int k,
                               const std::vector<Rational>& v) {
  if (k < 1) throw DimensionMismatch("delta_dir_matrix: degree must be >= 1");
  JetBasis src(n, m, k), dst(n, m, k - 1);
  Matrix d(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (std::size_t mi = 0; mi < src.monomials.size(); ++mi) {
    const MultiIndex& alpha = src.monomials[mi];
    for (int a = 0; a < n; ++a) {
      if (alpha[static_cast<std::size_t>(a)] == 0 || v[static_cast<std::size_t>(a)] == 0)
        continue;
      MultiIndex beta = alpha;
      --beta[static_cast<std::size_t>(a)];
      long long di = monomial_rank(beta);
      for (int dep = 0; dep < m; ++dep)
        d.at(static_cast<int>(dst.index(di, dep)),
             static_cast<int>(src.index(static_cast<long long>(mi), dep))) +=
            v[static_cast<std::size_t>(a)] * alpha[static_cast<std::size_t>(a)];
    }
  }
  return d;
}

inline std::vector<Rational> directional_delta(const std::vector<Rational>& p,
                                               const std::vector<Rational>& v,
                                               int n, int m, int k) {
  Matrix d = delta_dir_matrix(n, m, k, v);
  if (static_cast<int>(p.size()) != d.cols)
    throw DimensionMismatch("directional_delta: vector not in S^k (x) N");
  std::vector<Rational> out(static_cast<std::size_t>(d.rows));
  for (int r = 0; r < d.rows; ++r)
    for (int c = 0; c < d.cols; ++c)
      if (d.at(r, c) != 0 && p[static_cast<std::size_t>(c)] != 0)
        out[static_cast<std::size_t>(r)] += d.at(r, c) * p[static_cast<std::size_t>(c)];
  return out;
}

// First prolongation h^{(1)} = {p in S^{k+1}T* (x) N : delta_{e_a} p in h for
// all coordinate directions}, computed as the kernel of the stacked maps
// (annihilator(h) o delta_{e_a})_a.
inline Subspace prolong(const Subspace& h, int n, int m, int k) {
  if (h.ambient != ambient_dim(n, m, k))
    throw DimensionMismatch("prolong: subspace not in S^k (x) N");
  JetBasis up(n, m, k + 1), down(n, m, k);
  Matrix ann = annihilator(h);  // (A - dim h) x A
  Matrix stacked(n * ann.rows, static_cast<int>(up.size()));
  for (std::size_t bi = 0; bi < up.monomials.size(); ++bi) {
    const MultiIndex& beta = up.monomials[bi];
    for (int a = 0; a < n; ++a) {
      const int e = beta[static_cast<std::size_t>(a)];
      if (e == 0) continue;
      MultiIndex gamma = beta;
      --gamma[static_cast<std::size_t>(a)];
      long long di = monomial_rank(gamma);
      for (int dep = 0; dep < m; ++dep) {
        const int col = static_cast<int>(up.index(static_cast<long long>(bi), dep));
        const int dcol = static_cast<int>(down.index(di, dep));
        for (int q = 0; q < ann.rows; ++q)
          if (ann.at(q, dcol) != 0)
            stacked.at(a * ann.rows + q, col) += ann.at(q, dcol) * e;
      }
    }
  }
  return kernel_basis(stacked);
}

// A symbolic system g = {g_k}: g_0 = N and g_k inside g_{k-1}^{(1)}.
// Components are computed on demand and cached; the cache is shared between
// copies and internally synchronized, with behavior identical to sequential
// evaluation.
class SymbolicSystem {
 public:
  static SymbolicSystem create(int n, int m, std::vector<EquationSymbol> equations,
                               long long basis_limit = 200000) {
    if (n < 1 || m < 1) throw InvalidSystem("need n >= 1 and m >= 1");
    SymbolicSystem sys;
    sys.n_ = n;
    sys.m_ = m;
    sys.basis_limit_ = basis_limit;
    for (const EquationSymbol& eq : equations) {
      if (eq.order < 1)
        throw InvalidSystem("order-0 equations are rejected (g_0 = N is fixed)");
      bool nonzero = false;
      for (const auto& [key, coeff] : eq.terms) {
        const auto& [mono, dep] = key;
        if (static_cast<int>(mono.size()) != n)
          throw InvalidSystem("exponent vector length != n");
        if (dep < 0 || dep >= m) throw InvalidSystem("dependent index out of range");
        for (int e : mono)
          if (e < 0) throw InvalidSystem("negative exponent");
        if (degree(mono) != eq.order)
          throw InvalidSystem(
              "term degree differs from the declared order; supply the principal "
              "symbol of the stated order");
        if (coeff != 0) nonzero = true;
      }
      if (!nonzero) throw InvalidSystem("identically-zero equation");
      sys.r_min_ = std::min(sys.r_min_, eq.order);
      sys.r_max_ = std::max(sys.r_max_, eq.order);
      sys.equations_.push_back(eq);
    }
    if (sys.equations_.empty()) sys.r_min_ = sys.r_max_ = 0;
    sys.cache_ = std::make_shared<Cache>();
    return sys;
  }

  // The system g^{|k0>} generated by a single subspace at degree k0: full
  // below k0, prolongations of `g` at and above.
  static SymbolicSystem generated(int n, int m, int k0, Subspace g,
                                  long long basis_limit = 200000) {
    if (n < 1 || m < 1 || k0 < 1) throw InvalidSystem("bad generated-system data");
    if (g.ambient != ambient_dim(n, m, k0))
      throw InvalidSystem("generator subspace not in S^{k0} (x) N");
    SymbolicSystem sys;
    sys.n_ = n;
    sys.m_ = m;
    sys.basis_limit_ = basis_limit;
    sys.gen_degree_ = k0;
    sys.gen_space_ = std::move(g);
    sys.r_min_ = sys.r_max_ = k0;
    sys.cache_ = std::make_shared<Cache>();
    return sys;
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<EquationSymbol>& equations() const { return equations_; }
  long long basis_limit() const { return basis_limit_; }
  // Minimal/maximal equation order; 0 for the free system.
  int r_min() const { return r_min_; }
  int r_max() const { return r_max_; }
  int max_computed() const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    return static_cast<int>(cache_->comps.size()) - 1;
  }

  const Subspace& component(int k) const {
    if (k < 0) throw InvalidSystem("component: k must be >= 0");
    std::lock_guard<std::mutex> lk(cache_->mu);
    extend_locked(k);
    return cache_->comps[static_cast<std::size_t>(k)];
  }

  // dim g_{k-1}^{(1)} as recorded while computing g_k.
  long long prolonged_dim(int k) const {
    if (k < 1) throw InvalidSystem("prolonged_dim: k must be >= 1");
    std::lock_guard<std::mutex> lk(cache_->mu);
    extend_locked(k);
    return cache_->pdim[static_cast<std::size_t>(k)];
  }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<Subspace> comps;
    std::vector<long long> pdim;  // pdim[k] = dim prolong(g_{k-1})
  };

  void extend_locked(int k) const {
    while (static_cast<int>(cache_->comps.size()) <= k) {
      int i = static_cast<int>(cache_->comps.size());
      if (ambient_dim(n_, m_, i) > basis_limit_)
        throw ResourceLimit("basis limit exceeded at degree " + std::to_string(i) +
                            " (raise --limit-basis)");
      cache_->comps.push_back(compute_component(i));
      cache_->pdim.resize(cache_->comps.size());
      if (i >= 1) {
        bool below = gen_degree_ < 0 ? (equations_.empty() || i < r_min_)
                                     : (i <= gen_degree_);
        cache_->pdim[static_cast<std::size_t>(i)] =
            below ? ambient_dim(n_, m_, i) : pdim_scratch_;
      }
    }
  }

  Subspace compute_component(int k) const {
    const long long A = ambient_dim(n_, m_, k);
    if (k == 0) return Subspace::full(m_);
    if (gen_degree_ >= 0) {
      if (k < gen_degree_) return Subspace::full(static_cast<int>(A));
      if (k == gen_degree_) return gen_space_;
      Subspace h = prolong(cache_->comps[static_cast<std::size_t>(k - 1)], n_, m_, k - 1);
      pdim_scratch_ = h.dim();
      return h;
    }
    if (equations_.empty() || k < r_min_) return Subspace::full(static_cast<int>(A));
    Subspace h = prolong(cache_->comps[static_cast<std::size_t>(k - 1)], n_, m_, k - 1);
    pdim_scratch_ = h.dim();
    // Cut by the symbols of the order-k equations.
    std::vector<const EquationSymbol*> eqs;
    for (const EquationSymbol& eq : equations_)
      if (eq.order == k) eqs.push_back(&eq);
    if (eqs.empty()) return h;
    JetBasis basis(n_, m_, k);
    Matrix ann = annihilator(h);
    Matrix stacked(ann.rows + static_cast<int>(eqs.size()), static_cast<int>(A));
    std::copy(ann.a.begin(), ann.a.end(), stacked.a.begin());
    for (std::size_t e = 0; e < eqs.size(); ++e)
      for (const auto& [key, coeff] : eqs[e]->terms)
        stacked.at(ann.rows + static_cast<int>(e),
                   static_cast<int>(basis.index(key.first, key.second))) = coeff;
    return kernel_basis(stacked);
  }

  int n_ = 0, m_ = 0;
  std::vector<EquationSymbol> equations_;
  long long basis_limit_ = 200000;
  int r_min_ = INT_MAX, r_max_ = 0;
  int gen_degree_ = -1;
  Subspace gen_space_;
  std::shared_ptr<Cache> cache_;
  mutable long long pdim_scratch_ = 0;
};

// Orders of the system with multiplicities m(r) = dim g_{r-1}^{(1)} - dim g_r,
// and codim(g) = sum of multiplicities.
struct OrderProfile {
  std::vector<std::pair<int, long long>> orders;  // (r, m(r)), increasing, m(r) > 0
  long long codim = 0;
};

inline OrderProfile order_profile(const SymbolicSystem& sys, int up_to) {
  if (up_to < 1) throw InvalidSystem("order_profile: up_to must be >= 1");
  OrderProfile prof;
  for (int r = 1; r <= up_to; ++r) {
    if (sys.r_max() != 0 && r < sys.r_min()) continue;
    if (sys.r_max() == 0) break;  // free system: no orders
    long long mr = sys.prolonged_dim(r) - sys.component(r).dim();
    if (mr > 0) {
      prof.orders.emplace_back(r, mr);
      prof.codim += mr;
    }
  }
  return prof;
}

}  // namespace pdedim
