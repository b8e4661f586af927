#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "pdedim/symbolic.hpp"

namespace pdedim {

inline constexpr const char* kSystemSchema = "pdedim/v1";

struct ParsedSystem {
  std::string name;
  SymbolicSystem system;
};

// Input schema pdedim/v1:
// { "schema": "pdedim/v1", "name": "...", "independent": n, "dependent": m,
//   "equations": [ { "order": r,
//                    "terms": [ { "exponents": [..], "dependent": j,
//                                 "coeff": "p/q" } ] } ] }
inline ParsedSystem parse_system(const nlohmann::json& j,
                                 long long basis_limit = 200000) {
  auto fail = [](const std::string& msg) -> void { throw ParseError(msg); };
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("schema") || j.at("schema") != kSystemSchema)
    fail(std::string("missing or unsupported schema (expected \"") + kSystemSchema +
         "\")");
  for (const char* field : {"independent", "dependent", "equations"})
    if (!j.contains(field)) fail(std::string("missing field '") + field + "'");
  if (!j.at("independent").is_number_integer() || j.at("independent").get<int>() < 1)
    fail("'independent' must be an integer >= 1");
  if (!j.at("dependent").is_number_integer() || j.at("dependent").get<int>() < 1)
    fail("'dependent' must be an integer >= 1");
  const int n = j.at("independent").get<int>();
  const int m = j.at("dependent").get<int>();
  if (!j.at("equations").is_array()) fail("'equations' must be an array");

  std::vector<EquationSymbol> eqs;
  int eq_no = 0;
  for (const auto& je : j.at("equations")) {
    ++eq_no;
    auto ctx = "equation " + std::to_string(eq_no) + ": ";
    if (!je.is_object() || !je.contains("order") || !je.contains("terms"))
      fail(ctx + "must be an object with 'order' and 'terms'");
    if (!je.at("order").is_number_integer() || je.at("order").get<int>() < 1)
      fail(ctx + "'order' must be an integer >= 1 (order-0 equations are rejected)");
    EquationSymbol eq;
    eq.order = je.at("order").get<int>();
    if (!je.at("terms").is_array() || je.at("terms").empty())
      fail(ctx + "'terms' must be a non-empty array");
    for (const auto& jt : je.at("terms")) {
      if (!jt.is_object() || !jt.contains("exponents") || !jt.contains("dependent") ||
          !jt.contains("coeff"))
        fail(ctx + "each term needs 'exponents', 'dependent', 'coeff'");
      if (!jt.at("exponents").is_array() ||
          static_cast<int>(jt.at("exponents").size()) != n)
        fail(ctx + "'exponents' must be an array of length n = " + std::to_string(n));
      MultiIndex mono;
      for (const auto& e : jt.at("exponents")) {
        if (!e.is_number_integer() || e.get<int>() < 0)
          fail(ctx + "exponents must be non-negative integers");
        mono.push_back(e.get<int>());
      }
      if (degree(mono) != eq.order)
        fail(ctx + "term of degree " + std::to_string(degree(mono)) +
             " in an order-" + std::to_string(eq.order) +
             " equation; supply the principal symbol of the declared order only");
      if (!jt.at("dependent").is_number_integer())
        fail(ctx + "'dependent' must be an integer");
      const int dep = jt.at("dependent").get<int>();
      if (dep < 0 || dep >= m)
        fail(ctx + "dependent index " + std::to_string(dep) + " out of range [0, " +
             std::to_string(m) + ")");
      Rational coeff;
      if (jt.at("coeff").is_string())
        coeff = parse_rational(jt.at("coeff").get<std::string>());
      else if (jt.at("coeff").is_number_integer())
        coeff = rat(jt.at("coeff").get<long long>());
      else
        fail(ctx + "'coeff' must be a rational string like \"3\" or \"-1/2\"");
      eq.terms[{mono, dep}] += coeff;
    }
    eqs.push_back(std::move(eq));
  }
  std::string name = j.contains("name") && j.at("name").is_string()
                         ? j.at("name").get<std::string>()
                         : "";
  try {
    return {name, SymbolicSystem::create(n, m, std::move(eqs), basis_limit)};
  } catch (const InvalidSystem& e) {
    throw ParseError(e.what());
  }
}

// Canonical echo: terms sorted by (graded-lex monomial, dependent index),
// equations by order then original position.
inline nlohmann::json system_to_json(const std::string& name,
                                     const SymbolicSystem& sys) {
  nlohmann::json j;
  j["schema"] = kSystemSchema;
  j["name"] = name;
  j["independent"] = sys.n();
  j["dependent"] = sys.m();
  std::vector<const EquationSymbol*> eqs;
  for (const EquationSymbol& e : sys.equations()) eqs.push_back(&e);
  std::stable_sort(eqs.begin(), eqs.end(),
                   [](const EquationSymbol* a, const EquationSymbol* b) {
                     return a->order < b->order;
                   });
  j["equations"] = nlohmann::json::array();
  for (const EquationSymbol* e : eqs) {
    nlohmann::json je;
    je["order"] = e->order;
    std::vector<std::pair<std::pair<long long, int>, const Rational*>> terms;
    for (const auto& [key, coeff] : e->terms) {
      if (coeff == 0) continue;
      terms.push_back({{monomial_rank(key.first), key.second}, &coeff});
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    je["terms"] = nlohmann::json::array();
    std::vector<MultiIndex> monos = enumerate_monomials(sys.n(), e->order);
    for (const auto& [key, coeff] : terms) {
      nlohmann::json jt;
      jt["exponents"] = monos[static_cast<std::size_t>(key.first)];
      jt["dependent"] = key.second;
      jt["coeff"] = to_string(*coeff);
      je["terms"].push_back(jt);
    }
    j["equations"].push_back(je);
  }
  return j;
}

}  // namespace pdedim
