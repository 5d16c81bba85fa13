#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "thomkit/family.hpp"

namespace thomkit {

struct Factor {
  Variable var;
  int exponent;

  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// A canonically sorted product of variable powers. After normalization no
/// unit factors (fam[0] of a unit_at_zero family) and no zero exponents
/// remain; monomials that hit a vanishing index do not exist (normalize
/// returns nullopt instead).
class Monomial {
 public:
  Monomial() = default;  // the empty product, i.e. 1

  /// Sorts, merges repeated variables, and applies the index conventions.
  /// nullopt means the monomial is zero. Throws std::invalid_argument on
  /// nonpositive exponents.
  static std::optional<Monomial> normalize(std::span<const Factor> raw) {
    std::vector<Factor> fs(raw.begin(), raw.end());
    for (const Factor& f : fs) {
      if (f.exponent <= 0) throw std::invalid_argument("exponents must be positive");
    }
    std::sort(fs.begin(), fs.end());
    Monomial m;
    for (std::size_t i = 0; i < fs.size();) {
      std::size_t j = i;
      int exp = 0;
      while (j < fs.size() && fs[j].var == fs[i].var) exp += fs[j++].exponent;
      const Variable v = fs[i].var;
      const FamilySpec& fam = spec_of(v.family);
      if (fam.indexed && v.index < 0 && fam.vanishes_below_zero) return std::nullopt;
      if (!(fam.indexed && v.index == 0 && fam.unit_at_zero)) {
        m.factors_.push_back({v, exp});
        m.degree_ += v.degree() * exp;
      }
      i = j;
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  /// Chern-graded degree (can be negative for d-family monomials).
  int degree() const { return degree_; }

  /// Number of variable slots counted with multiplicity.
  int factor_count() const {
    int n = 0;
    for (const Factor& f : factors_) n += f.exponent;
    return n;
  }

  /// Product of normalized monomials needs no re-normalization: exponents of
  /// shared variables add and no new indices appear.
  Monomial operator*(const Monomial& rhs) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin(), b = rhs.factors_.begin();
    while (a != factors_.end() && b != rhs.factors_.end()) {
      if (a->var == b->var) {
        out.factors_.push_back({a->var, a->exponent + b->exponent});
        ++a, ++b;
      } else if (a->var < b->var) {
        out.factors_.push_back(*a++);
      } else {
        out.factors_.push_back(*b++);
      }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, rhs.factors_.end());
    out.degree_ = degree_ + rhs.degree_;
    return out;
  }

  bool operator==(const Monomial& rhs) const { return factors_ == rhs.factors_; }

  /// Canonical term order: graded, then lexicographic on the factor list.
  std::strong_ordering operator<=>(const Monomial& rhs) const {
    if (auto c = degree_ <=> rhs.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        factors_.begin(), factors_.end(), rhs.factors_.begin(), rhs.factors_.end());
  }

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

}  // namespace thomkit
