#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pdedim/cartan.hpp"
#include "pdedim/gci.hpp"
#include "pdedim/hilbert.hpp"
#include "pdedim/io.hpp"

namespace pdedim {

inline constexpr const char* kReportSchema = "pdedim-report/v1";

struct AnalyzeOptions {
  std::optional<int> max_degree;  // default 2 r_max + n + 4
  std::uint64_t seed = 0;
  int flag_samples = 3;
  long long limit_basis = 200000;
};

struct CrossCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct OrderVerdict {
  int order = 0;
  CartanCharacters characters;
  bool spencer_involutive = false;
};

struct GciReport {
  bool applicable = false;  // r within [m, n+m)
  GciClassification classification;
  std::vector<int> orders;  // k_1..k_r with multiplicity
  int d = 1;
  std::optional<int> p;
  std::optional<long long> sigma;
};

struct AnalysisReport {
  std::string name;
  int n = 0, m = 0;
  int k_max = 0;
  int spencer_i_max = 0;
  AnalyzeOptions options;
  std::vector<long long> dims;  // dim g_0 .. dim g_{k_max}
  OrderProfile order_profile;
  SpencerTable spencer;
  HilbertProfile hilbert;
  std::optional<Poly> resolution_polynomial;
  std::vector<OrderVerdict> cartan_tests;
  int genre = 0;
  long long cartan_integer = 0;
  int genre_eval_order = 0;
  GciReport gci;
  std::vector<CrossCheck> cross_checks;
  std::vector<std::string> warnings;

  bool ok() const {
    for (const CrossCheck& c : cross_checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {
inline std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int d = p.degree(); d >= 0; --d) {
    if (p.coeff(d) == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_string(p.coeff(d));
    if (d > 0) s += "*z^" + std::to_string(d);
  }
  return s;
}
}  // namespace detail

// The full pipeline: components -> order profile -> Spencer table -> both
// Hilbert polynomials -> cross-checks -> (p, sigma) -> Cartan tests at each
// order -> GCI classification. Deterministic given (input, seed, limits).
inline AnalysisReport analyze(const SymbolicSystem& sys, const AnalyzeOptions& opts,
                              const std::string& name = "") {
  AnalysisReport rep;
  rep.name = name;
  rep.n = sys.n();
  rep.m = sys.m();
  rep.options = opts;
  const int n = sys.n();
  const int r_max = sys.r_max();
  rep.k_max = opts.max_degree.value_or(2 * r_max + n + 4);

  for (int k = 0; k <= rep.k_max; ++k) rep.dims.push_back(sys.component(k).dim());
  if (r_max >= 1) rep.order_profile = order_profile(sys, r_max);

  // Spencer window: escalate until a zero tail appears (the Hilbert
  // cross-check below is the certificate that it was wide enough).
  int i_max = std::min(r_max + n + 1, rep.k_max - 1);
  rep.spencer = spencer_table(sys, i_max);
  while (!rep.spencer.vanished_beyond && i_max < rep.k_max - 1) {
    i_max = std::min(i_max + 2, rep.k_max - 1);
    rep.spencer = spencer_table(sys, i_max);
  }
  rep.spencer_i_max = i_max;

  // Hilbert side, both routes.
  for (int k = 0; k <= rep.k_max; ++k)
    rep.hilbert.values.push_back(hilbert_function(sys, k));
  auto [poly, stab] = fit_polynomial(rep.hilbert.values, n);
  rep.hilbert.polynomial = poly;
  rep.hilbert.stabilized_from = stab;
  auto [p, sigma] = dimension_and_rank(poly);
  rep.hilbert.p = p;
  rep.hilbert.sigma = sigma;

  if (rep.spencer.vanished_beyond) {
    Poly res = polynomial_from_resolution(rep.spencer, n);
    // Disagreement can mean cohomology beyond the window; widen once more
    // before declaring failure.
    while (res != poly && i_max < rep.k_max - 1) {
      i_max = std::min(i_max + 2, rep.k_max - 1);
      rep.spencer = spencer_table(sys, i_max);
      rep.spencer_i_max = i_max;
      if (!rep.spencer.vanished_beyond) break;
      res = polynomial_from_resolution(rep.spencer, n);
    }
    rep.resolution_polynomial = res;
    rep.cross_checks.push_back(
        {"hilbert_fit_equals_resolution", res == poly,
         "fit: " + detail::poly_str(poly) + "; resolution: " + detail::poly_str(res)});
    rep.hilbert.b = b_coefficients(rep.spencer, n);
    Poly from_b = poly_from_b(rep.hilbert.b, n);
    rep.cross_checks.push_back(
        {"b_expansion_reproduces_polynomial", from_b == poly,
         "sum b_k z^{n-k}/(n-k)!: " + detail::poly_str(from_b) +
             "; fit: " + detail::poly_str(poly)});
  } else {
    rep.warnings.push_back(
        "Spencer table shows no zero tail up to i_max = " + std::to_string(i_max) +
        "; resolution-route Hilbert polynomial unavailable (raise --max-degree)");
  }

  // m(r) = h^{r-1,1} and codim = sum h^{i,1}.
  for (const auto& [r, mult] : rep.order_profile.orders) {
    bool okr = r - 1 <= rep.spencer.i_max && rep.spencer.at(r - 1, 1) == mult;
    rep.cross_checks.push_back(
        {"multiplicity_equals_h^{" + std::to_string(r - 1) + ",1}", okr,
         "m(" + std::to_string(r) + ") = " + std::to_string(mult) + ", h = " +
             std::to_string(r - 1 <= rep.spencer.i_max ? rep.spencer.at(r - 1, 1) : -1)});
  }
  if (rep.spencer.vanished_beyond) {
    long long sum_h1 = 0;
    for (int i = 0; i <= rep.spencer.i_max; ++i) sum_h1 += rep.spencer.at(i, 1);
    rep.cross_checks.push_back({"codim_equals_sum_h^{*,1}",
                                sum_h1 == rep.order_profile.codim,
                                "codim = " + std::to_string(rep.order_profile.codim) +
                                    ", sum = " + std::to_string(sum_h1)});
  }

  // Cartan tests at each order, cross-validated against the Spencer criterion.
  bool all_involutive = true;
  for (const auto& [r, mult] : rep.order_profile.orders) {
    OrderVerdict v;
    v.order = r;
    v.characters = cartan_test(sys, r, opts.seed, opts.flag_samples);
    v.spencer_involutive = involutivity_via_spencer(sys, r, r + n + 1);
    all_involutive = all_involutive && v.characters.involutive;
    rep.cross_checks.push_back(
        {"cartan_test_equals_spencer_criterion_at_order_" + std::to_string(r),
         v.characters.involutive == v.spencer_involutive,
         std::string("cartan: ") + (v.characters.involutive ? "involutive" : "not") +
             ", spencer: " + (v.spencer_involutive ? "involutive" : "not")});
    rep.cartan_tests.push_back(std::move(v));
  }

  auto [genre, integer] = genre_and_integer(sys, rep.hilbert, opts.seed,
                                            opts.flag_samples);
  rep.genre = genre;
  rep.cartan_integer = integer;
  rep.genre_eval_order = std::max(rep.hilbert.stabilized_from, r_max) + 1;
  if (all_involutive)
    rep.cross_checks.push_back(
        {"cartan_genre_integer_equal_hilbert_p_sigma",
         genre == rep.hilbert.p && integer == rep.hilbert.sigma,
         "cartan (" + std::to_string(genre) + ", " + std::to_string(integer) +
             ") vs hilbert (" + std::to_string(rep.hilbert.p) + ", " +
             std::to_string(rep.hilbert.sigma) + ")"});

  // Theorem-1 rank for pure first-order involutive systems.
  if (r_max == 1 && all_involutive && !rep.order_profile.orders.empty()) {
    std::vector<long long> row0;
    for (int j = 0; j <= n; ++j) row0.push_back(rep.spencer.at(0, j));
    try {
      long long t1 = involutive_first_order_rank(row0, n, rep.hilbert.p);
      rep.cross_checks.push_back(
          {"first_order_rank_formula", t1 == rep.hilbert.sigma,
           "formula sigma = " + std::to_string(t1) + ", hilbert sigma = " +
               std::to_string(rep.hilbert.sigma)});
    } catch (const NonIntegerResult& e) {
      rep.cross_checks.push_back({"first_order_rank_formula", false, e.what()});
    }
  }

  // GCI classification from codim and the Hilbert dimension.
  rep.gci.classification =
      classify_gci(n, sys.m(), rep.order_profile.codim, rep.hilbert.p);
  rep.gci.applicable = rep.gci.classification.range_ok;
  for (const auto& [r, mult] : rep.order_profile.orders)
    for (long long t = 0; t < mult; ++t) rep.gci.orders.push_back(r);
  if (rep.gci.classification.is_gci) {
    GciProfile prof{n, sys.m(), static_cast<int>(rep.order_profile.codim),
                    rep.gci.orders, 1};
    rep.gci.p = gci_dimension(prof);
    rep.gci.sigma = gci_rank(prof);
    rep.cross_checks.push_back(
        {"gci_closed_form_equals_hilbert",
         *rep.gci.p == rep.hilbert.p && *rep.gci.sigma == rep.hilbert.sigma,
         "gci (" + std::to_string(*rep.gci.p) + ", " + std::to_string(*rep.gci.sigma) +
             ") vs hilbert (" + std::to_string(rep.hilbert.p) + ", " +
             std::to_string(rep.hilbert.sigma) + ")"});
  }
  return rep;
}

inline nlohmann::json report_to_json(const AnalysisReport& rep,
                                     const nlohmann::json& input_echo) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["input"] = input_echo;
  j["limits"] = {{"max_degree", rep.k_max},
                 {"limit_basis", rep.options.limit_basis},
                 {"seed", rep.options.seed},
                 {"flag_samples", rep.options.flag_samples}};
  j["dims"] = rep.dims;
  {
    nlohmann::json jo;
    jo["orders"] = nlohmann::json::array();
    for (const auto& [r, mult] : rep.order_profile.orders)
      jo["orders"].push_back({{"order", r}, {"multiplicity", mult}});
    jo["codim"] = rep.order_profile.codim;
    j["order_profile"] = jo;
  }
  {
    nlohmann::json js;
    js["i_max"] = rep.spencer.i_max;
    if (rep.spencer.vanished_beyond)
      js["vanished_beyond"] = *rep.spencer.vanished_beyond;
    else
      js["vanished_beyond"] = nullptr;
    js["table"] = rep.spencer.h;
    j["spencer"] = js;
  }
  {
    nlohmann::json jh;
    jh["values"] = rep.hilbert.values;
    jh["polynomial"] = nlohmann::json::array();  // lowest degree first
    for (const Rational& c : rep.hilbert.polynomial.c)
      jh["polynomial"].push_back(to_string(c));
    jh["stabilized_from"] = rep.hilbert.stabilized_from;
    jh["p"] = rep.hilbert.p;
    jh["sigma"] = rep.hilbert.sigma;
    jh["b"] = nlohmann::json::array();
    for (const Rational& c : rep.hilbert.b) jh["b"].push_back(to_string(c));
    j["hilbert"] = jh;
  }
  {
    nlohmann::json jc;
    jc["seed"] = rep.options.seed;
    jc["samples"] = rep.options.flag_samples;
    jc["genre"] = rep.genre;
    jc["integer"] = rep.cartan_integer;
    jc["eval_order"] = rep.genre_eval_order;
    jc["tests"] = nlohmann::json::array();
    for (const OrderVerdict& v : rep.cartan_tests)
      jc["tests"].push_back({{"order", v.order},
                             {"characters", v.characters.s},
                             {"kernel_dims", v.characters.kernel_dims},
                             {"involutive", v.characters.involutive},
                             {"spencer_involutive", v.spencer_involutive}});
    j["cartan"] = jc;
  }
  {
    nlohmann::json jg;
    jg["applicable"] = rep.gci.applicable;
    jg["is_gci"] = rep.gci.classification.is_gci;
    jg["detail"] = rep.gci.classification.detail;
    jg["r"] = rep.gci.classification.r;
    jg["orders"] = rep.gci.orders;
    jg["d"] = rep.gci.d;
    if (rep.gci.p) jg["p"] = *rep.gci.p;
    if (rep.gci.sigma) jg["sigma"] = *rep.gci.sigma;
    j["gci"] = jg;
  }
  j["cross_checks"] = nlohmann::json::array();
  for (const CrossCheck& c : rep.cross_checks)
    j["cross_checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["warnings"] = rep.warnings;
  return j;
}

inline std::string report_to_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "system: " << (rep.name.empty() ? "(unnamed)" : rep.name) << "  n=" << rep.n
     << " m=" << rep.m << "\n\n";
  os << "dim g_k (k = 0.." << rep.k_max << "):\n  ";
  for (long long d : rep.dims) os << d << " ";
  os << "\n\norders (r : multiplicity):";
  if (rep.order_profile.orders.empty()) os << " none";
  for (const auto& [r, mult] : rep.order_profile.orders)
    os << "  " << r << " : " << mult;
  os << "\ncodim(g) = " << rep.order_profile.codim << "\n";
  os << "\nSpencer h^{i,j} (rows i = 0.." << rep.spencer.i_max << ", cols j = 0.."
     << rep.n << "):\n";
  for (int i = 0; i <= rep.spencer.i_max; ++i) {
    os << "  i=" << i << ":";
    for (int jj = 0; jj <= rep.n; ++jj) os << "\t" << rep.spencer.at(i, jj);
    os << "\n";
  }
  if (rep.spencer.vanished_beyond)
    os << "  (all rows beyond i = " << *rep.spencer.vanished_beyond << " vanish)\n";
  os << "\nHilbert function f(k): ";
  for (long long v : rep.hilbert.values) os << v << " ";
  os << "\nHilbert polynomial: P(z) = " << detail::poly_str(rep.hilbert.polynomial)
     << "  (stable from k = " << rep.hilbert.stabilized_from << ")\n";
  os << "functional dimension p = " << rep.hilbert.p
     << "\nfunctional rank sigma = " << rep.hilbert.sigma << "\n";
  os << "\nCartan genre = " << rep.genre << ", Cartan integer = " << rep.cartan_integer
     << "  (characters evaluated at order " << rep.genre_eval_order
     << "; intermediate characters are flag-relative)\n";
  for (const OrderVerdict& v : rep.cartan_tests) {
    os << "order " << v.order << ": characters (";
    for (std::size_t i = 0; i < v.characters.s.size(); ++i)
      os << (i ? ", " : "") << v.characters.s[i];
    os << "), cartan test: " << (v.characters.involutive ? "involutive" : "NOT involutive")
       << ", spencer criterion: "
       << (v.spencer_involutive ? "involutive" : "NOT involutive") << "\n";
  }
  os << "\nGCI: " << (rep.gci.classification.is_gci ? "yes" : "no") << " ("
     << rep.gci.classification.detail << ")";
  if (rep.gci.p) os << "; closed form p = " << *rep.gci.p << ", sigma = " << *rep.gci.sigma;
  os << "\n\ncross-checks:\n";
  for (const CrossCheck& c : rep.cross_checks)
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " (" << c.detail
       << ")\n";
  for (const std::string& w : rep.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace pdedim
