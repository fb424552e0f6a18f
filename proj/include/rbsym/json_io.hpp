#pragma once

#include <string>

#include "json.hpp"
#include "rbsym/composition.hpp"
#include "rbsym/digraph.hpp"
#include "rbsym/hopf.hpp"
#include "rbsym/polynomial.hpp"
#include "rbsym/qsym.hpp"
#include "rbsym/verify.hpp"

namespace rbsym {

using json = nlohmann::ordered_json;

[[nodiscard]] inline json to_json(const Digraph& x) {
  json edges = json::array();
  for (const Edge& e : x.edges()) edges.push_back({e.source, e.target});
  return {{"n", x.size()}, {"edges", edges}};
}

/// {degree, basis, terms: [{subset, composition, coeff}]}, terms by ascending subset mask.
[[nodiscard]] inline json to_json(const QSymElem& phi) {
  json terms = json::array();
  for (const auto& [key, c] : phi.terms()) {
    const DescentSet s(phi.degree(), key);
    terms.push_back({{"subset", s.positions()}, {"composition", comp_of_subset(s).parts()}, {"coeff", std::to_string(c)}});
  }
  return {{"degree", phi.degree()}, {"basis", basis_name(phi.basis())}, {"terms", terms}};
}

/// {coefficients: [c_0, ..., c_d], text}; integral coefficients are numbers, others "p/q" strings.
[[nodiscard]] inline json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coefficients()) {
    if (c.is_integer()) {
      coeffs.push_back(c.to_integer());
    } else {
      coeffs.push_back(c.fraction_string());
    }
  }
  return {{"coefficients", coeffs}, {"text", p.to_string()}};
}

[[nodiscard]] inline json to_json(const DigraphCombination& x) {
  json terms = json::array();
  for (const auto& [g, c] : x.terms()) terms.push_back({{"digraph", to_json(g)}, {"coeff", c.fraction_string()}});
  return {{"terms", terms}};
}

[[nodiscard]] inline json to_json(const TensorCombination& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms()) {
    terms.push_back({{"left", to_json(k.first)}, {"right", to_json(k.second)}, {"coeff", c.fraction_string()}});
  }
  return {{"terms", terms}};
}

/// {digraph: {n, edges}, checks: [{name, status, details?}]}.
[[nodiscard]] inline json to_json(const IdentityReport& report) {
  json checks = json::array();
  for (const IdentityCheck& c : report.checks) {
    json entry = {{"name", c.name}, {"status", status_name(c.status)}};
    if (c.status == CheckStatus::fail) entry["details"] = {{"lhs", c.lhs}, {"rhs", c.rhs}};
    if (c.status == CheckStatus::skip) entry["details"] = {{"note", c.note}};
    checks.push_back(entry);
  }
  return {{"digraph", to_json(report.digraph)}, {"checks", checks}};
}

}  // namespace rbsym
