#include <doctest.h>

#include <random>

#include "pdedim/presets.hpp"
#include "pdedim/symbolic.hpp"

using namespace pdedim;

namespace {

MultiIndex mono(std::vector<int> e) { return e; }

Subspace unit_span(int ambient, const std::vector<int>& coords) {
  Matrix m(static_cast<int>(coords.size()), ambient);
  for (int r = 0; r < m.rows; ++r) m.at(r, coords[static_cast<std::size_t>(r)]) = 1;
  return Subspace::from_rows(std::move(m));
}

SymbolicSystem heat() { return make_preset("heat").system; }

}  // namespace

TEST_CASE("create validates its input") {
  EquationSymbol ok{2, {{{mono({0, 2}), 0}, Rational(1)}}};
  CHECK_NOTHROW(SymbolicSystem::create(2, 1, {ok}));
  CHECK_THROWS_AS(SymbolicSystem::create(0, 1, {}), InvalidSystem);
  // order 0
  CHECK_THROWS_AS(
      SymbolicSystem::create(2, 1, {EquationSymbol{0, {{{mono({0, 0}), 0}, Rational(1)}}}}),
      InvalidSystem);
  // exponent length != n
  CHECK_THROWS_AS(
      SymbolicSystem::create(2, 1, {EquationSymbol{2, {{{mono({0, 1, 1}), 0}, Rational(1)}}}}),
      InvalidSystem);
  // dependent index out of range
  CHECK_THROWS_AS(
      SymbolicSystem::create(2, 1, {EquationSymbol{2, {{{mono({0, 2}), 1}, Rational(1)}}}}),
      InvalidSystem);
  // degree != declared order
  CHECK_THROWS_AS(
      SymbolicSystem::create(2, 1, {EquationSymbol{2, {{{mono({0, 1}), 0}, Rational(1)}}}}),
      InvalidSystem);
  // identically-zero equation
  CHECK_THROWS_AS(
      SymbolicSystem::create(2, 1, {EquationSymbol{2, {{{mono({0, 2}), 0}, Rational(0)}}}}),
      InvalidSystem);
  // negative exponent
  CHECK_THROWS_AS(
      SymbolicSystem::create(2, 1, {EquationSymbol{2, {{{mono({3, -1}), 0}, Rational(1)}}}}),
      InvalidSystem);
}

TEST_CASE("free system components") {
  SymbolicSystem sys = SymbolicSystem::create(2, 3, {});
  CHECK(sys.r_max() == 0);
  for (int k = 0; k <= 4; ++k)
    CHECK(sys.component(k).dim() == ambient_dim(2, 3, k));
  CHECK(order_profile(sys, 4).orders.empty());
  CHECK(order_profile(sys, 4).codim == 0);
}

TEST_CASE("directional_delta on monomials") {
  // p = x_0^2 in n=2, m=1: delta_{e_0} p = 2 x_0.
  std::vector<Rational> p{Rational(1), Rational(0), Rational(0)};  // (2,0)
  std::vector<Rational> e0{Rational(1), Rational(0)};
  std::vector<Rational> e1{Rational(0), Rational(1)};
  CHECK(directional_delta(p, e0, 2, 1, 2) ==
        std::vector<Rational>{Rational(2), Rational(0)});
  // p = x_0 x_1: delta_{e_0} p = x_1.
  std::vector<Rational> q{Rational(0), Rational(1), Rational(0)};  // (1,1)
  CHECK(directional_delta(q, e0, 2, 1, 2) ==
        std::vector<Rational>{Rational(0), Rational(1)});
  CHECK_THROWS_AS(directional_delta({Rational(1)}, e0, 2, 1, 2),
                  DimensionMismatch);
}

TEST_CASE("mixed directional derivatives commute") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const int n = 3, m = 2, k = 3;
    std::vector<Rational> p(static_cast<std::size_t>(ambient_dim(n, m, k)));
    std::vector<Rational> v(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    for (Rational& x : p) x = rat(static_cast<long long>(rng() % 9) - 4);
    for (Rational& x : v) x = rat(static_cast<long long>(rng() % 9) - 4);
    for (Rational& x : w) x = rat(static_cast<long long>(rng() % 9) - 4);
    auto vw = directional_delta(directional_delta(p, v, n, m, k), w, n, m, k - 1);
    auto wv = directional_delta(directional_delta(p, w, n, m, k), v, n, m, k - 1);
    CHECK(vw == wv);
  }
}

TEST_CASE("prolong: trivial cases and the heat example") {
  CHECK(prolong(Subspace::full(static_cast<int>(ambient_dim(2, 1, 2))), 2, 1, 2) ==
        Subspace::full(static_cast<int>(ambient_dim(2, 1, 3))));
  CHECK(prolong(Subspace::zero(static_cast<int>(ambient_dim(2, 1, 2))), 2, 1, 2).dim() == 0);
  // heat g_2 = span{t^2, tx} -> g_3 = span{t^3, t^2 x}.
  Subspace g2 = unit_span(3, {0, 1});
  Subspace g3 = prolong(g2, 2, 1, 2);
  CHECK(g3 == unit_span(4, {0, 1}));
}

TEST_CASE("prolong agrees with the membership definition") {
  // Every basis vector p of prolong(h) has delta_{e_a} p in h, and every
  // degree-(k+1) vector with that property lies in prolong(h).
  std::mt19937_64 rng(5);
  for (int t = 0; t < 8; ++t) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 2);
    const int k = 1 + static_cast<int>(rng() % 2);
    const int A = static_cast<int>(ambient_dim(n, m, k));
    Matrix rows(1 + static_cast<int>(rng() % 3), A);
    for (Rational& x : rows.a) x = rat(static_cast<long long>(rng() % 7) - 3);
    Subspace h = Subspace::from_rows(std::move(rows));
    Subspace ph = prolong(h, n, m, k);
    const int B = static_cast<int>(ambient_dim(n, m, k + 1));
    for (int r = 0; r < ph.basis.rows; ++r) {
      std::vector<Rational> p(ph.basis.a.begin() + static_cast<std::size_t>(r) * B,
                              ph.basis.a.begin() + static_cast<std::size_t>(r + 1) * B);
      for (int a = 0; a < n; ++a) {
        std::vector<Rational> dir(static_cast<std::size_t>(n));
        dir[static_cast<std::size_t>(a)] = 1;
        CHECK(contains(h, directional_delta(p, dir, n, m, k + 1)));
      }
    }
    // Independent count: stack the full delta matrices reduced mod h.
    Matrix ann = annihilator(h);
    Matrix stacked(n * ann.rows, B);
    for (int a = 0; a < n; ++a) {
      std::vector<Rational> dir(static_cast<std::size_t>(n));
      dir[static_cast<std::size_t>(a)] = 1;
      Matrix block = Matrix(ann).mul(delta_dir_matrix(n, m, k + 1, dir));
      std::copy(block.a.begin(), block.a.end(),
                stacked.a.begin() + static_cast<std::size_t>(a) * ann.rows * B);
    }
    CHECK(ph == kernel_basis(stacked));
  }
}

TEST_CASE("component oracles") {
  SymbolicSystem h = heat();
  CHECK(h.r_min() == 2);
  CHECK(h.r_max() == 2);
  CHECK(h.component(0).dim() == 1);
  CHECK(h.component(1).dim() == 2);
  CHECK(h.component(2) == unit_span(3, {0, 1}));
  CHECK(h.component(3) == unit_span(4, {0, 1}));
  for (int k = 2; k <= 8; ++k) CHECK(h.component(k).dim() == 2);

  // Laplace n=2: one order-2 relation, dim g_3 = 2.
  EquationSymbol lap{2, {{{mono({2, 0}), 0}, Rational(1)},
                         {{mono({0, 2}), 0}, Rational(1)}}};
  SymbolicSystem l = SymbolicSystem::create(2, 1, {lap});
  CHECK(l.component(2).dim() == 2);
  CHECK(l.component(3).dim() == 2);

  // Symplectic n=2: g_i = S^{i+1}T*, so dim g_2 = dim S^3 = 4.
  SymbolicSystem sp = make_preset("symplectic", {{"n", 2}}).system;
  CHECK(sp.component(1).dim() == 3);
  CHECK(sp.component(2).dim() == 4);
  CHECK(sp.component(3).dim() == 5);
}

TEST_CASE("containment invariant: delta_v g_k inside g_{k-1}") {
  for (const std::string& name : {"heat", "riemannian", "symplectic"}) {
    SymbolicSystem sys = make_preset(name).system;
    const int n = sys.n(), m = sys.m();
    for (int k = 1; k <= 4; ++k) {
      const Subspace& gk = sys.component(k);
      const Subspace& gkm = sys.component(k - 1);
      const int A = static_cast<int>(ambient_dim(n, m, k));
      for (int r = 0; r < gk.basis.rows; ++r) {
        std::vector<Rational> p(gk.basis.a.begin() + static_cast<std::size_t>(r) * A,
                                gk.basis.a.begin() + static_cast<std::size_t>(r + 1) * A);
        for (int a = 0; a < n; ++a) {
          std::vector<Rational> dir(static_cast<std::size_t>(n));
          dir[static_cast<std::size_t>(a)] = 1;
          CHECK(contains(gkm, directional_delta(p, dir, n, m, k)));
        }
      }
    }
  }
}

TEST_CASE("mixed orders: late equations cut the prolongation") {
  // Order-1 relation xi_0 = 0 plus order-2 relation xi_1^2 = 0 on the plane.
  EquationSymbol e1{1, {{{mono({1, 0}), 0}, Rational(1)}}};
  EquationSymbol e2{2, {{{mono({0, 2}), 0}, Rational(1)}}};
  SymbolicSystem sys = SymbolicSystem::create(2, 1, {e1, e2});
  CHECK(sys.component(1).dim() == 1);   // span{x_1}
  CHECK(sys.component(2).dim() == 0);   // x_1^2 is cut by the order-2 symbol
  CHECK(sys.component(3).dim() == 0);
  OrderProfile prof = order_profile(sys, 2);
  REQUIRE(prof.orders.size() == 2);
  CHECK(prof.orders[0] == std::pair<int, long long>{1, 1});
  CHECK(prof.orders[1] == std::pair<int, long long>{2, 1});
  CHECK(prof.codim == 2);
}

TEST_CASE("order profiles of the classical systems") {
  OrderProfile ph = order_profile(heat(), 2);
  REQUIRE(ph.orders.size() == 1);
  CHECK(ph.orders[0] == std::pair<int, long long>{2, 1});
  CHECK(ph.codim == 1);

  OrderProfile ps = order_profile(make_preset("symplectic", {{"n", 2}}).system, 1);
  REQUIRE(ps.orders.size() == 1);
  CHECK(ps.orders[0] == std::pair<int, long long>{1, 1});
  CHECK(ps.codim == 1);
}

TEST_CASE("generated systems: full below, generator at k0, prolongations above") {
  SymbolicSystem h = heat();
  SymbolicSystem aux = SymbolicSystem::generated(2, 1, 2, h.component(2));
  CHECK(aux.component(0).dim() == 1);
  CHECK(aux.component(1).dim() == 2);
  CHECK(aux.component(2) == h.component(2));
  CHECK(aux.component(3) == h.component(3));
  CHECK(aux.component(5) == h.component(5));
}

TEST_CASE("resource limit is enforced") {
  SymbolicSystem tiny = SymbolicSystem::create(3, 2, {}, 10);
  CHECK_NOTHROW(tiny.component(1));
  CHECK_THROWS_AS(tiny.component(4), ResourceLimit);
}
