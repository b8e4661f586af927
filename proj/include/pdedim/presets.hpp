#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdedim/symbolic.hpp"

namespace pdedim {

struct UnknownPreset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expected invariants shipped with a preset (used as executable oracles).
struct PresetExpectation {
  std::optional<int> p;
  std::optional<long long> sigma;
  std::optional<bool> involutive;
};

struct Preset {
  std::string name;
  std::map<std::string, int> parameters;
  SymbolicSystem system;
  PresetExpectation expected;
};

namespace detail {
inline MultiIndex unit_mono(int n, int i, int e = 1) {
  MultiIndex mi(static_cast<std::size_t>(n), 0);
  mi[static_cast<std::size_t>(i)] = e;
  return mi;
}

// Standard symplectic form: omega(e_2t, e_2t+1) = 1.
inline int omega(int i, int j) {
  if (i / 2 != j / 2) return 0;
  if (i + 1 == j && i % 2 == 0) return 1;
  if (j + 1 == i && j % 2 == 0) return -1;
  return 0;
}

// Standard complex structure: J e_2t = e_2t+1, J e_2t+1 = -e_2t.
inline int j_partner(int i) { return (i % 2 == 0) ? i + 1 : i - 1; }
inline int j_sign(int i) { return (i % 2 == 0) ? 1 : -1; }
}  // namespace detail

inline Preset make_preset(const std::string& name,
                          std::map<std::string, int> params = {},
                          long long basis_limit = 200000) {
  auto param = [&](const std::string& key, int def) {
    auto it = params.find(key);
    return it == params.end() ? def : it->second;
  };
  auto need_even = [&](int n) {
    if (n < 2 || n % 2 != 0)
      throw UnknownPreset("preset '" + name + "' needs an even n >= 2");
  };
  Preset p;
  p.name = name;

  if (name == "free") {
    const int n = param("n", 2), m = param("m", 1);
    p.parameters = {{"n", n}, {"m", m}};
    p.system = SymbolicSystem::create(n, m, {}, basis_limit);
    p.expected = {n, m, true};
    return p;
  }
  if (name == "heat") {
    // u_t = u_xx; the order-2 symbol is -xi_x^2 (the xi_t term is order 1).
    EquationSymbol eq{2, {{{detail::unit_mono(2, 1, 2), 0}, Rational(-1)}}};
    p.parameters = {{"n", 2}, {"m", 1}};
    p.system = SymbolicSystem::create(2, 1, {eq}, basis_limit);
    p.expected = {1, 2, true};
    return p;
  }
  if (name == "laplace") {
    const int n = param("n", 3);
    if (n < 2) throw UnknownPreset("laplace needs n >= 2");
    EquationSymbol eq{2, {}};
    for (int i = 0; i < n; ++i)
      eq.terms[{detail::unit_mono(n, i, 2), 0}] = Rational(1);
    p.parameters = {{"n", n}, {"m", 1}};
    p.system = SymbolicSystem::create(n, 1, {eq}, basis_limit);
    p.expected = {n - 1, 2, std::nullopt};
    return p;
  }
  if (name == "two_generic_order2") {
    // xi_1^2 and xi_2^2: no common complex characteristics.
    EquationSymbol e1{2, {{{detail::unit_mono(2, 0, 2), 0}, Rational(1)}}};
    EquationSymbol e2{2, {{{detail::unit_mono(2, 1, 2), 0}, Rational(1)}}};
    p.parameters = {{"n", 2}, {"m", 1}};
    p.system = SymbolicSystem::create(2, 1, {e1, e2}, basis_limit);
    p.expected = {0, 4, std::nullopt};
    return p;
  }
  if (name == "symplectic") {
    const int n = param("n", 2);
    need_even(n);
    // g_1 = sp(n): Omega A symmetric, one equation per pair i < b.
    std::vector<EquationSymbol> eqs;
    for (int i = 0; i < n; ++i)
      for (int b = i + 1; b < n; ++b) {
        EquationSymbol eq{1, {}};
        for (int j = 0; j < n; ++j) {
          if (int w = detail::omega(i, j); w != 0)
            eq.terms[{detail::unit_mono(n, b), j}] += Rational(w);
          if (int w = detail::omega(b, j); w != 0)
            eq.terms[{detail::unit_mono(n, i), j}] -= Rational(w);
        }
        eqs.push_back(eq);
      }
    p.parameters = {{"n", n}, {"m", n}};
    p.system = SymbolicSystem::create(n, n, eqs, basis_limit);
    p.expected = {n, 1, true};
    return p;
  }
  if (name == "complex_structure") {
    const int n = param("n", 2);
    need_even(n);
    // g_1 = C-linear endomorphisms: AJ - JA = 0 entrywise.
    std::vector<EquationSymbol> eqs;
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < n; ++b) {
        EquationSymbol eq{1, {}};
        eq.terms[{detail::unit_mono(n, detail::j_partner(b)), i}] +=
            Rational(detail::j_sign(b));
        eq.terms[{detail::unit_mono(n, b), detail::j_partner(i)}] -=
            Rational(detail::j_sign(detail::j_partner(i)));
        for (auto it = eq.terms.begin(); it != eq.terms.end();)
          it = (it->second == 0) ? eq.terms.erase(it) : std::next(it);
        if (!eq.terms.empty()) eqs.push_back(eq);
      }
    p.parameters = {{"n", n}, {"m", n}};
    p.system = SymbolicSystem::create(n, n, eqs, basis_limit);
    p.expected = {n / 2, n, true};
    return p;
  }
  if (name == "riemannian") {
    const int n = param("n", 2);
    if (n < 2) throw UnknownPreset("riemannian needs n >= 2");
    // g_1 = o(n): symmetric part of A vanishes.
    std::vector<EquationSymbol> eqs;
    for (int i = 0; i < n; ++i)
      for (int b = i; b < n; ++b) {
        EquationSymbol eq{1, {}};
        eq.terms[{detail::unit_mono(n, b), i}] += Rational(1);
        eq.terms[{detail::unit_mono(n, i), b}] += Rational(1);
        eqs.push_back(eq);
      }
    p.parameters = {{"n", n}, {"m", n}};
    p.system = SymbolicSystem::create(n, n, eqs, basis_limit);
    p.expected = {0, static_cast<long long>(n) * (n + 1) / 2, false};
    return p;
  }
  throw UnknownPreset("unknown preset '" + name +
                      "' (known: free, heat, laplace, two_generic_order2, "
                      "symplectic, complex_structure, riemannian)");
}

inline std::vector<std::string> preset_names() {
  return {"free",       "heat",
          "laplace",    "two_generic_order2",
          "symplectic", "complex_structure",
          "riemannian"};
}

}  // namespace pdedim
