#pragma once

#include <vector>

#include "pdedim/rational.hpp"

namespace pdedim {

// Univariate polynomial with exact rational coefficients, lowest degree first.
struct Poly {
  std::vector<Rational> c;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(Rational v) { return Poly({std::move(v)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

  const Rational& lead() const { return c.back(); }

  Rational coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c.size())) return Rational(0);
    return c[static_cast<std::size_t>(d)];
  }

  Rational eval(const Rational& z) const {
    Rational r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    for (Rational& x : c) x *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly p;
    p.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    p.trim();
    return p;
  }

  friend bool operator==(const Poly&, const Poly&) = default;
};

// binom(z + shift + k, k) as a polynomial in z:
// (1/k!) (z + shift + 1)(z + shift + 2) ... (z + shift + k).
inline Poly binomial_poly(int k, const Rational& shift) {
  Poly p = Poly::constant(1);
  for (int t = 1; t <= k; ++t) p = p * Poly({shift + t, Rational(1)});
  Rational inv(1);
  inv /= Rational(factorial(k));
  return p * inv;
}

}  // namespace pdedim
