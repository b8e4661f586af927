#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdedim/poly.hpp"
#include "pdedim/spencer.hpp"

namespace pdedim {

struct NoStabilization : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIntegerResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f(k) = sum_{i<=k} dim g_i, the Hilbert function of the symbolic module.
inline long long hilbert_function(const SymbolicSystem& sys, int k) {
  long long f = 0;
  for (int i = 0; i <= k; ++i) f += sys.component(i).dim();
  return f;
}

// Smallest s such that the degree-<=n interpolation through values[s..s+n]
// reproduces every later supplied value exactly.
inline std::pair<Poly, int> fit_polynomial(const std::vector<long long>& values,
                                           int n) {
  if (static_cast<int>(values.size()) < n + 3)
    throw NoStabilization("fit_polynomial: need at least n+3 values");
  for (int s = 0; s + n + 1 < static_cast<int>(values.size()); ++s) {
    // Newton divided differences on the integer points s..s+n.
    std::vector<Rational> dd(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
      dd[static_cast<std::size_t>(i)] = rat(values[static_cast<std::size_t>(s + i)]);
    for (int lvl = 1; lvl <= n; ++lvl)
      for (int i = n; i >= lvl; --i)
        dd[static_cast<std::size_t>(i)] =
            (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
            Rational(lvl);
    Poly p = Poly::constant(dd[static_cast<std::size_t>(n)]);
    for (int i = n - 1; i >= 0; --i)
      p = p * Poly({Rational(-(s + i)), Rational(1)}) +
          Poly::constant(dd[static_cast<std::size_t>(i)]);
    bool ok = true;
    for (int k = s + n + 1; k < static_cast<int>(values.size()); ++k)
      if (p.eval(Rational(k)) != rat(values[static_cast<std::size_t>(k)])) {
        ok = false;
        break;
      }
    if (ok) return {p, s};
  }
  throw NoStabilization(
      "Hilbert function did not stabilize in the computed window (raise "
      "--max-degree)");
}

// P(z) = sum_q sum_i (-1)^i h^{q,i} binom(z - q - i + n, n), assembled from
// the Spencer resolution of the symbolic module.
inline Poly polynomial_from_resolution(const SpencerTable& table, int n) {
  if (!table.vanished_beyond)
    throw IncompleteTable(
        "polynomial_from_resolution: table has no zero tail; not all cohomology "
        "was seen");
  Poly p;
  for (int q = 0; q <= table.i_max; ++q)
    for (int i = 0; i <= n; ++i) {
      long long h = table.at(q, i);
      if (h == 0) continue;
      Poly term = binomial_poly(n, Rational(-(q + i)));
      term *= rat(h) * (i % 2 == 0 ? 1 : -1);
      p += term;
    }
  return p;
}

// s_i^n = (n-i)!/n! S_i(1, ..., n).
inline Rational s_coefficient(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("s_coefficient: need 0 <= i <= n");
  std::vector<long long> vals(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) vals[static_cast<std::size_t>(t)] = t + 1;
  Rational r(elementary_symmetric(i, vals));
  r *= Rational(factorial(n - i));
  r /= Rational(factorial(n));
  return r;
}

// (q + i)^e with the 0^0 = 1 convention.
inline BigInt int_pow(long long base, int e) {
  BigInt r = 1;
  for (int t = 0; t < e; ++t) r *= big(base);
  return r;
}

// b_k = sum_{j=0}^k sum_{q,i} (-1)^{i+j+k} h^{q,i} s_j^n (q+i)^{k-j}/(k-j)!.
// Expansion identity: P(z) = sum_k b_k z^{n-k}/(n-k)!.
inline std::vector<Rational> b_coefficients(const SpencerTable& table, int n) {
  if (!table.vanished_beyond)
    throw IncompleteTable("b_coefficients: incomplete Spencer table");
  std::vector<Rational> b(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= k; ++j) {
      Rational sj = s_coefficient(j, n);
      for (int q = 0; q <= table.i_max; ++q)
        for (int i = 0; i <= n; ++i) {
          long long h = table.at(q, i);
          if (h == 0) continue;
          Rational term(int_pow(q + i, k - j));
          term /= Rational(factorial(k - j));
          term *= sj * rat(h);
          if ((i + j + k) % 2 != 0) term = -term;
          b[static_cast<std::size_t>(k)] += term;
        }
    }
  return b;
}

inline Poly poly_from_b(const std::vector<Rational>& b, int n) {
  Poly p;
  for (int k = 0; k <= n; ++k) {
    Poly term;
    term.c.assign(static_cast<std::size_t>(n - k) + 1, Rational(0));
    term.c[static_cast<std::size_t>(n - k)] =
        b[static_cast<std::size_t>(k)] / Rational(factorial(n - k));
    term.trim();
    p += term;
  }
  return p;
}

// p = deg P, sigma = p! * lead(P); (0, 0) for the zero polynomial.
inline std::pair<int, long long> dimension_and_rank(const Poly& p) {
  if (p.is_zero()) return {0, 0};
  int deg = p.degree();
  Rational s = p.lead() * Rational(factorial(deg));
  if (!is_integer(s) || s <= 0)
    throw NonIntegerResult("leading coefficient times p! is not a positive integer");
  return {deg, s.get_num().get_si()};
}

// Theorem-1 rank for involutive pure first-order systems with
// codim Char = n - p: sigma = sum_i (-1)^i h^{0,i} (-i)^{n-p}/(n-p)!.
inline long long involutive_first_order_rank(const std::vector<long long>& h_row,
                                             int n, int p) {
  if (p < 0 || p > n) throw std::invalid_argument("need 0 <= p <= n");
  const int e = n - p;
  Rational sigma(0);
  for (int i = 0; i < static_cast<int>(h_row.size()); ++i) {
    if (h_row[static_cast<std::size_t>(i)] == 0) continue;
    Rational term(int_pow(-i, e));
    term /= Rational(factorial(e));
    term *= rat(h_row[static_cast<std::size_t>(i)]);
    if (i % 2 != 0) term = -term;
    sigma += term;
  }
  if (!is_integer(sigma) || sigma <= 0)
    throw NonIntegerResult(
        "Theorem-1 rank is not a positive integer; the involutivity / pure-order / "
        "codim preconditions do not hold (got " + to_string(sigma) + ")");
  return sigma.get_num().get_si();
}

// Everything the pipeline records about the Hilbert side.
struct HilbertProfile {
  std::vector<long long> values;  // f(0..k_max)
  Poly polynomial;
  int stabilized_from = 0;
  int p = 0;
  long long sigma = 0;
  std::vector<Rational> b;  // b_0..b_n, empty when the table was incomplete
};

}  // namespace pdedim
