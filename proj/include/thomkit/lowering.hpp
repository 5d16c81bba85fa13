#pragma once

#include <cassert>
#include <map>

#include "thomkit/series.hpp"

namespace thomkit {

namespace lowering_detail {

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

// Sums over all ways of picking `remaining` slots from the factors at
// position >= idx, decrementing the picked indices. Equal slots are folded
// into one choice weighted by a binomial, which is why factor multiplicities
// are walked instead of raw slots.
inline void lower_choices(const std::vector<Factor>& factors, std::size_t idx, int remaining,
                          std::vector<Factor>& acc, const Rational& mult, const Rational& coeff,
                          Polynomial& out) {
  if (idx == factors.size()) {
    if (remaining == 0) out += Polynomial::term(coeff * mult, acc);
    return;
  }
  const auto [var, exponent] = factors[idx];
  const std::size_t base = acc.size();
  for (int pick = 0; pick <= std::min(exponent, remaining); ++pick) {
    acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(base), acc.end());
    if (pick > 0) acc.push_back({Variable(var.family, var.index - 1), pick});
    if (pick < exponent) acc.push_back({var, exponent - pick});
    lower_choices(factors, idx + 1, remaining - pick,
                  acc, mult * Rational(binomial(exponent, pick)), coeff, out);
  }
  acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(base), acc.end());
}

}  // namespace lowering_detail

/// The lowering operator: per monomial with r slots, sums over all i-element
/// subsets of slots, decrementing each selected index by 1, under the usual
/// conventions (x[0] = 1, x[<0] = 0; d-family indices shift and never
/// vanish). Monomials with fewer than i slots contribute 0; linear overall.
inline Polynomial lower(const Polynomial& p, int i) {
  if (i < 0) throw precondition_error("lowering order must be nonnegative");
  const auto fams = p.families();
  if (fams.count(Family::y)) throw precondition_error("lowering is undefined for y");
  if (fams.size() > 1) {
    throw precondition_error("lowering input must stay within a single variable family");
  }
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.factor_count() < i) continue;
    std::vector<Factor> acc;
    lowering_detail::lower_choices(m.factors(), 0, i, acc, 1, c, out);
  }
  return out;
}

/// Renames every d[i] to d[i+s]; bijective on d-family polynomials.
inline Polynomial shift_indices(const Polynomial& p, int s) {
  const auto fams = p.families();
  if (!fams.empty() && fams != std::set<Family>{Family::d}) {
    throw precondition_error("index shift expects a d-family polynomial");
  }
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Factor> raw;
    raw.reserve(m.factors().size());
    for (const Factor& f : m.factors()) {
      raw.push_back({Variable(Family::d, f.var.index + s), f.exponent});
    }
    out += Polynomial::term(c, raw);
  }
  return out;
}

/// A polynomial in c and y collected by y-power: parts[e] is the coefficient
/// of y^e, homogeneous of c-degree top_degree - e. Zero parts are not stored.
struct YExpansion {
  int top_degree = 0;
  std::map<int, Polynomial> parts;

  Polynomial part(int e) const {
    auto it = parts.find(e);
    return it == parts.end() ? Polynomial{} : it->second;
  }

  /// Recombines sum parts[e] * y^e.
  Polynomial recombine() const {
    Polynomial out;
    for (const auto& [e, q] : parts) {
      out += q * pow(Polynomial::variable(Variable(Family::y, 0)), e);
    }
    return out;
  }
};

/// Substitutes cs[i] |-> coefficient of t^i in the twisted total class
/// (generic c series times xi_num/xi_den), expands exactly, and collects by
/// y-power. The cap must cover the degree of p; the substitution itself is
/// polynomial-exact, never truncated.
inline YExpansion twist_expand(const Polynomial& p, const TruncatedSeries& xi_num,
                               const TruncatedSeries& xi_den, int cap) {
  const auto fams = p.families();
  if (!fams.empty() && fams != std::set<Family>{Family::cs}) {
    throw precondition_error("twist expansion expects a cs-family polynomial");
  }
  if (!p.is_homogeneous()) {
    throw precondition_error("twist expansion expects a homogeneous polynomial");
  }
  const int top = p.degree().value_or(0);
  if (cap < top) throw precondition_error("series cap smaller than the polynomial degree");

  const TruncatedSeries twisted =
      twist_total_class(TruncatedSeries::total_class(Family::c, cap), xi_num, xi_den);
  const Polynomial substituted = substitute(p, [&](const Variable& v) {
    if (v.index > cap) throw precondition_error("cs index exceeds the series cap");
    return twisted.coeff(v.index);
  });

  YExpansion out;
  out.top_degree = top;
  for (const auto& [m, c] : substituted.terms()) {
    std::vector<Factor> cpart;
    int e = 0;
    for (const Factor& f : m.factors()) {
      if (f.var.family == Family::y) {
        e = f.exponent;
      } else {
        cpart.push_back(f);
      }
    }
    auto cm = Monomial::normalize(cpart);
    assert(cm && cm->degree() == top - e);
    out.parts[e].add(c, *cm);
  }
  std::erase_if(out.parts, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace thomkit
