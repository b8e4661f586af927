#include <doctest.h>

#include "pdedim/cartan.hpp"
#include "pdedim/hilbert.hpp"
#include "pdedim/presets.hpp"

using namespace pdedim;

namespace {

Poly poly(std::vector<Rational> lowest_first) { return Poly(std::move(lowest_first)); }

}  // namespace

TEST_CASE("hilbert_function sums component dimensions") {
  SymbolicSystem h = make_preset("heat").system;
  CHECK(hilbert_function(h, 3) == 1 + 2 + 2 + 2);
  SymbolicSystem sp = make_preset("symplectic", {{"n", 2}}).system;
  CHECK(hilbert_function(sp, 2) == 2 + 3 + 4);
  SymbolicSystem fr = SymbolicSystem::create(2, 1, {});
  for (int k = 0; k <= 5; ++k)
    CHECK(hilbert_function(fr, k) == dim_jet_fiber(2, k));
}

TEST_CASE("fit_polynomial recovers exact polynomials") {
  // f(k) = 2k + 1 from the start.
  std::vector<long long> heat_vals{1, 3, 5, 7, 9, 11, 13};
  auto [ph, sh] = fit_polynomial(heat_vals, 2);
  CHECK(ph == poly({Rational(1), Rational(2)}));
  CHECK(sh == 0);

  // Eventually-polynomial data: junk prefix, then constant 4.
  std::vector<long long> late{1, 3, 7, 4, 4, 4, 4, 4};
  auto [pl, sl] = fit_polynomial(late, 2);
  CHECK(pl == poly({Rational(4)}));
  CHECK(sl == 3);

  // Symplectic n=2: f(k) = (k+1)(k+4)/2.
  std::vector<long long> sp;
  for (int k = 0; k <= 7; ++k) sp.push_back((k + 1) * (k + 4) / 2);
  auto [ps, ss] = fit_polynomial(sp, 2);
  CHECK(ps == poly({Rational(2), Rational(5) / 2, Rational(1) / 2}));
  CHECK(ss == 0);

  CHECK_THROWS_AS(fit_polynomial({1, 2}, 2), NoStabilization);
  CHECK_THROWS_AS(fit_polynomial({1, 2, 4, 8, 16, 32, 64, 128}, 2), NoStabilization);
}

TEST_CASE("polynomial_from_resolution on known tables") {
  // heat: h^{0,0}=1, h^{1,1}=1 -> binom(z+2,2) - binom(z,2) = 2z + 1.
  SpencerTable heat;
  heat.n = 2;
  heat.i_max = 2;
  heat.h = {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  heat.vanished_beyond = 1;
  CHECK(polynomial_from_resolution(heat, 2) == poly({Rational(1), Rational(2)}));

  // symplectic n=2: h^{0,0}=2, h^{0,1}=1 -> 2 binom(z+2,2) - binom(z+1,2).
  SpencerTable sp;
  sp.n = 2;
  sp.i_max = 1;
  sp.h = {{2, 1, 0}, {0, 0, 0}};
  sp.vanished_beyond = 0;
  CHECK(polynomial_from_resolution(sp, 2) ==
        poly({Rational(2), Rational(5) / 2, Rational(1) / 2}));

  // Riemannian n=2: h^{0,0}=2, h^{0,1}=3, h^{1,2}=1 -> constant 3.
  SpencerTable rm;
  rm.n = 2;
  rm.i_max = 2;
  rm.h = {{2, 3, 0}, {0, 0, 1}, {0, 0, 0}};
  rm.vanished_beyond = 1;
  CHECK(polynomial_from_resolution(rm, 2) == poly({Rational(3)}));

  SpencerTable open;
  open.n = 2;
  open.i_max = 1;
  open.h = {{1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(polynomial_from_resolution(open, 2), IncompleteTable);
}

TEST_CASE("s_coefficient closed forms") {
  CHECK(s_coefficient(0, 3) == Rational(1));
  // s_1^n = (n+1)/2.
  for (int n = 1; n <= 8; ++n)
    CHECK(s_coefficient(1, n) == Rational(n + 1) / 2);
  CHECK(s_coefficient(2, 2) == Rational(1));
  // Closed form s_2^n = (n+1)(3n+2)/24.
  for (int n = 2; n <= 8; ++n)
    CHECK(s_coefficient(2, n) == Rational((n + 1) * (3 * n + 2)) / 24);
  CHECK_THROWS_AS(s_coefficient(4, 3), std::invalid_argument);
}

TEST_CASE("expansion identity: binom(z+n, n) = sum_k s_k^n z^{n-k}/(n-k)!") {
  for (int n = 1; n <= 8; ++n) {
    Poly lhs = binomial_poly(n, Rational(0));
    Poly rhs;
    for (int k = 0; k <= n; ++k) {
      Poly term;
      term.c.assign(static_cast<std::size_t>(n - k) + 1, Rational(0));
      term.c[static_cast<std::size_t>(n - k)] =
          s_coefficient(k, n) / Rational(factorial(n - k));
      term.trim();
      rhs += term;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("b coefficients") {
  // Free system m=1: the table is h^{0,0}=1 only and b_k = s_k^n.
  for (int n = 1; n <= 4; ++n) {
    SymbolicSystem fr = SymbolicSystem::create(n, 1, {});
    SpencerTable t = spencer_table(fr, 2);
    std::vector<Rational> b = b_coefficients(t, n);
    for (int k = 0; k <= n; ++k) CHECK(b[static_cast<std::size_t>(k)] == s_coefficient(k, n));
    CHECK(poly_from_b(b, n) == binomial_poly(n, Rational(0)));
  }
  // Complex structure n=2: P = 2z + 2, so b_0 = 0 and b_1 = 2.
  SymbolicSystem cx = make_preset("complex_structure", {{"n", 2}}).system;
  SpencerTable t = spencer_table(cx, 3);
  std::vector<Rational> b = b_coefficients(t, 2);
  CHECK(b[0] == 0);
  CHECK(b[1] == 2);
  CHECK(poly_from_b(b, 2) == poly({Rational(2), Rational(2)}));
}

TEST_CASE("dimension_and_rank conventions") {
  CHECK(dimension_and_rank(poly({Rational(1), Rational(2)})) ==
        std::pair<int, long long>{1, 2});
  CHECK(dimension_and_rank(poly({Rational(2), Rational(5) / 2, Rational(1) / 2})) ==
        std::pair<int, long long>{2, 1});
  CHECK(dimension_and_rank(Poly()) == std::pair<int, long long>{0, 0});
  CHECK(dimension_and_rank(poly({Rational(3)})) == std::pair<int, long long>{0, 3});
  CHECK_THROWS_AS(dimension_and_rank(poly({Rational(0), Rational(1) / 3})),
                  NonIntegerResult);
}

TEST_CASE("Theorem-1 rank for involutive first-order systems") {
  // symplectic n=2: h-row (2, 1, 0), p = 2 -> sigma = 1 (= Euler characteristic).
  CHECK(involutive_first_order_rank({2, 1, 0}, 2, 2) == 1);
  // complex n=2: h-row (2, 2, 0), p = 1 -> 1*h^{0,1} - 2*h^{0,2} ... = 2.
  CHECK(involutive_first_order_rank({2, 2, 0}, 2, 1) == 2);
  // symplectic n=4: h-row (4, 6, 4, 1, 0), p = 4 -> alternating sum 4-6+4-1 = 1.
  CHECK(involutive_first_order_rank({4, 6, 4, 1, 0}, 4, 4) == 1);
  CHECK_THROWS_AS(involutive_first_order_rank({1, 0, 0}, 2, 3), std::invalid_argument);
}
