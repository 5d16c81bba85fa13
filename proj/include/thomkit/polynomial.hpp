#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>

#include "thomkit/error.hpp"
#include "thomkit/monomial.hpp"
#include "thomkit/rational.hpp"

namespace thomkit {

/// Sparse polynomial over exact rationals; zero coefficients are never
/// stored, so term-wise map equality is polynomial equality. Values are
/// immutable in spirit: every operation returns a fresh polynomial.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Rational value) {
    Polynomial p;
    p.add(value, Monomial{});
    return p;
  }

  static Polynomial one() { return constant(1); }

  /// Variable as a polynomial, with the index conventions applied
  /// (c[0] -> 1, c[-1] -> 0, d[-1] stays).
  static Polynomial variable(Variable v) { return term(1, {{{v, 1}}}); }

  /// Normalizes a raw factor list and attaches a coefficient.
  static Polynomial term(Rational coeff, std::span<const Factor> raw) {
    Polynomial p;
    if (auto m = Monomial::normalize(raw)) p.add(coeff, *m);
    return p;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates coeff * m, erasing the entry if it cancels to zero.
  void add(const Rational& coeff, const Monomial& m) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Highest term degree; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (!d || m.degree() > *d) d = m.degree();
    }
    return d;
  }

  bool is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (d && m.degree() != *d) return false;
      d = m.degree();
    }
    return true;
  }

  std::set<Family> families() const {
    std::set<Family> fs;
    for (const auto& [m, c] : terms_) {
      for (const Factor& f : m.factors()) fs.insert(f.var.family);
    }
    return fs;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(c, m);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(-c, m);
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    for (const auto& [ma, ca] : lhs.terms_) {
      for (const auto& [mb, cb] : rhs.terms_) out.add(ca * cb, ma * mb);
    }
    return out;
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    Polynomial out;
    if (s == 0) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

  bool operator==(const Polynomial&) const = default;

 private:
  std::map<Monomial, Rational> terms_;
};

inline Polynomial pow(const Polynomial& base, int exp) {
  if (exp < 0) throw precondition_error("negative polynomial power");
  Polynomial out = Polynomial::one();
  for (int i = 0; i < exp; ++i) out = out * base;
  return out;
}

/// Replaces every variable by its image and expands exactly.
inline Polynomial substitute(const Polynomial& p,
                             const std::function<Polynomial(const Variable&)>& image) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(c);
    for (const Factor& f : m.factors()) term = term * pow(image(f.var), f.exponent);
    out += term;
  }
  return out;
}

/// Renames one family into another, reapplying index conventions (so
/// cs -> c keeps indices but a target-family c[0] would be dropped).
inline Polynomial retag(const Polynomial& p, Family from, Family to) {
  return substitute(p, [&](const Variable& v) {
    return Polynomial::variable(v.family == from ? Variable(to, v.index) : v);
  });
}

}  // namespace thomkit
