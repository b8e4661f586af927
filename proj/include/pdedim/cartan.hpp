#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pdedim/hilbert.hpp"

namespace pdedim {

struct GenericityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n independent integer vectors with entries in [-bound, bound], drawn by a
// seeded deterministic generator (raw mt19937_64 outputs reduced by modulo, so
// the stream is identical across platforms). Resamples until independent;
// widens the bound after 100 attempts.
inline std::vector<std::vector<Rational>> generic_flag(std::uint64_t seed, int n,
                                                       int bound = 5) {
  std::mt19937_64 rng(seed);
  auto draw = [&](int b) {
    return static_cast<long long>(rng() % (2 * static_cast<std::uint64_t>(b) + 1)) - b;
  };
  for (int attempt = 0;; ++attempt) {
    const int b = bound + attempt / 100;
    Matrix f(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) f.at(r, c) = rat(draw(b));
    if (rank(f) == n) {
      std::vector<std::vector<Rational>> flag(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) {
        flag[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) flag[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = f.at(r, c);
      }
      return flag;
    }
  }
}

// Kernel chain dims d_0..d_n, d_j = dim {p in g_k : delta_{v_1}p = ... =
// delta_{v_j}p = 0}.
inline std::vector<long long> flag_kernel_dims(
    const Subspace& g_k, int n, int m, int k,
    const std::vector<std::vector<Rational>>& flag) {
  if (k < 1) throw DimensionMismatch("flag_kernel_dims: k must be >= 1");
  const int d = g_k.dim();
  Matrix bt = g_k.basis.transpose();  // ambient x d
  std::vector<long long> dims(static_cast<std::size_t>(n + 1));
  dims[0] = d;
  Matrix stacked(0, d);
  for (int j = 1; j <= n; ++j) {
    Matrix mj = delta_dir_matrix(n, m, k, flag[static_cast<std::size_t>(j - 1)]).mul(bt);
    Matrix next(stacked.rows + mj.rows, d);
    std::copy(stacked.a.begin(), stacked.a.end(), next.a.begin());
    std::copy(mj.a.begin(), mj.a.end(),
              next.a.begin() + static_cast<std::size_t>(stacked.rows) * d);
    stacked = std::move(next);
    dims[static_cast<std::size_t>(j)] = d - rank(stacked);
  }
  return dims;
}

// Cartan characters for one flag: s_j = d_{j-1} - d_j.
inline std::vector<long long> characters(const Subspace& g_k, int n, int m, int k,
                                         const std::vector<std::vector<Rational>>& flag) {
  std::vector<long long> d = flag_kernel_dims(g_k, n, m, k, flag);
  std::vector<long long> s(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    s[static_cast<std::size_t>(j - 1)] =
        d[static_cast<std::size_t>(j - 1)] - d[static_cast<std::size_t>(j)];
  return s;
}

struct CartanCharacters {
  int order = 0;
  std::vector<long long> s;            // s_1..s_n
  std::vector<long long> kernel_dims;  // minimized d_0..d_n
  std::uint64_t flag_seed = 0;
  int samples = 0;
  bool involutive = false;
  int genre = 0;
  long long integer_sigma = 0;  // s_genre; 0 when all characters vanish
};

namespace detail {
// Characters over several flags; generic flags minimize the kernel dims, so
// take the coordinate-wise minimum.
inline CartanCharacters sampled_characters(const SymbolicSystem& sys, int k,
                                           std::uint64_t seed, int samples) {
  const int n = sys.n(), m = sys.m();
  const Subspace& gk = sys.component(k);
  std::vector<long long> dmin;
  for (int t = 0; t < samples; ++t) {
    auto flag = generic_flag(seed + static_cast<std::uint64_t>(t), n);
    std::vector<long long> d = flag_kernel_dims(gk, n, m, k, flag);
    if (dmin.empty())
      dmin = d;
    else
      for (std::size_t i = 0; i < d.size(); ++i) dmin[i] = std::min(dmin[i], d[i]);
  }
  CartanCharacters cc;
  cc.order = k;
  cc.kernel_dims = dmin;
  cc.flag_seed = seed;
  cc.samples = samples;
  cc.s.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    cc.s[static_cast<std::size_t>(j - 1)] =
        dmin[static_cast<std::size_t>(j - 1)] - dmin[static_cast<std::size_t>(j)];
  for (int j = n; j >= 1; --j)
    if (cc.s[static_cast<std::size_t>(j - 1)] != 0) {
      cc.genre = j;
      cc.integer_sigma = cc.s[static_cast<std::size_t>(j - 1)];
      break;
    }
  return cc;
}
}  // namespace detail

// Cartan's test at order k: involutive iff dim g_{k+1} = sum_j j s_j. The
// inequality dim g_{k+1} <= sum_j j s_j holds for genuinely generic flags;
// a violation means a non-generic flag escaped detection.
inline CartanCharacters cartan_test(const SymbolicSystem& sys, int k,
                                    std::uint64_t seed, int samples = 3) {
  CartanCharacters cc = detail::sampled_characters(sys, k, seed, samples);
  long long bound = 0;
  for (int j = 1; j <= sys.n(); ++j)
    bound += static_cast<long long>(j) * cc.s[static_cast<std::size_t>(j - 1)];
  long long next = sys.component(k + 1).dim();
  if (next > bound)
    throw GenericityFailure("Cartan inequality violated at order " +
                            std::to_string(k) + ": dim g_{k+1} = " +
                            std::to_string(next) + " > " + std::to_string(bound) +
                            " (non-generic flags; try another --seed)");
  cc.involutive = (next == bound);
  return cc;
}

// Cartan genre and integer, read off in the stable range (strictly above both
// the Hilbert stabilization point and the maximal order). For genre 0 the
// integer is the constant value of the Hilbert polynomial.
inline std::pair<int, long long> genre_and_integer(const SymbolicSystem& sys,
                                                   const HilbertProfile& profile,
                                                   std::uint64_t seed,
                                                   int samples = 3) {
  const int k_eval = std::max(profile.stabilized_from, sys.r_max()) + 1;
  CartanCharacters cc = detail::sampled_characters(sys, k_eval, seed, samples);
  if (cc.genre >= 1) return {cc.genre, cc.integer_sigma};
  Rational v = profile.polynomial.eval(Rational(k_eval));
  return {0, v.get_num().get_si()};
}

// Spencer form of the involutivity criterion at order k: the system generated
// by g_k has vanishing cohomology in all degrees >= k.
inline bool involutivity_via_spencer(const SymbolicSystem& sys, int k, int window) {
  if (window < k + sys.n())
    throw std::invalid_argument("involutivity_via_spencer: window must be >= k + n");
  SymbolicSystem aux = SymbolicSystem::generated(sys.n(), sys.m(), k,
                                                 sys.component(k), sys.basis_limit());
  SpencerTable t = spencer_table(aux, window);
  for (int i = k; i <= window; ++i)
    if (!t.row_zero(i)) return false;
  return true;
}

}  // namespace pdedim
