#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdedim {

// Exact arithmetic everywhere: all invariants of this library are integers or
// rationals and numeric rank is untrustworthy for structured symbol matrices.
using Rational = mpq_class;
using BigInt = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p" or "p/q" with optional leading '-'. Result is canonical
// (gcd 1, positive denominator).
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      return from;  // no digits
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i;
  };
  pos = digits(0);
  if (pos == 0) throw ParseError("bad rational literal: '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != '/' || digits(pos + 1) != s.size() || s[pos + 1] == '-' ||
        s[pos + 1] == '+')
      throw ParseError("bad rational literal: '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// gmpxx has no long long constructors; route 64-bit values through `long`
// (identical width on every platform we target) in one audited place.
inline BigInt big(long long v) { return BigInt(static_cast<long>(v)); }
inline Rational rat(long long v) { return Rational(static_cast<long>(v)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline BigInt factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// binom(a, k) for a >= 0; by convention 0 when 0 <= a < k or a < 0 (the
// vanishing convention used in the combinatorial Lemma).
inline BigInt binomial(const BigInt& a, int k) {
  if (k < 0 || a < k) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline BigInt binomial(long a, int k) { return binomial(BigInt(a), k); }

// j-th elementary symmetric polynomial of the values; S_0 = 1.
inline BigInt elementary_symmetric(int j, const std::vector<long long>& values) {
  if (j < 0 || j > static_cast<int>(values.size()))
    throw std::invalid_argument("elementary_symmetric: index out of range");
  std::vector<BigInt> e(static_cast<std::size_t>(j) + 1);
  e[0] = 1;
  for (long long v : values)
    for (int t = j; t >= 1; --t)
      e[static_cast<std::size_t>(t)] +=
          e[static_cast<std::size_t>(t - 1)] * big(v);
  return e[static_cast<std::size_t>(j)];
}

}  // namespace pdedim
