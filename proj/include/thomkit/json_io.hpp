#pragma once

#include <json.hpp>

#include "thomkit/polynomial.hpp"

namespace thomkit {

/// Machine-readable term list: [{coeff: "num/den", factors: [[tag, index,
/// exponent], ...]}, ...] in canonical term order. y is emitted with index 0.
inline nlohmann::json to_json_terms(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json factors = nlohmann::json::array();
    for (const Factor& f : m.factors()) {
      factors.push_back({std::string(tag_of(f.var.family)), f.var.index, f.exponent});
    }
    terms.push_back({{"coeff", to_string(c)}, {"factors", std::move(factors)}});
  }
  return terms;
}

inline Polynomial polynomial_from_json_terms(const nlohmann::json& terms) {
  if (!terms.is_array()) throw parse_error("term list must be an array");
  Polynomial p;
  for (const auto& t : terms) {
    Rational coeff = parse_rational(t.at("coeff").get<std::string>());
    std::vector<Factor> factors;
    for (const auto& f : t.at("factors")) {
      auto fam = family_from_tag(f.at(0).get<std::string>());
      if (!fam) throw parse_error("unknown family tag in term list");
      factors.push_back({Variable(*fam, f.at(1).get<int>()), f.at(2).get<int>()});
    }
    p += Polynomial::term(coeff, factors);
  }
  return p;
}

}  // namespace thomkit
