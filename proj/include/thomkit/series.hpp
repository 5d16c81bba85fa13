#pragma once

#include <utility>
#include <vector>

#include "thomkit/polynomial.hpp"

namespace thomkit {

/// Formal series in t truncated at t^cap, with polynomial coefficients.
/// Total classes keep their constant coefficient equal to 1.
class TruncatedSeries {
 public:
  static constexpr int kDefaultCap = 12;

  explicit TruncatedSeries(int cap) : cap_(check_cap(cap)), coeffs_(cap + 1) {}

  TruncatedSeries(int cap, std::vector<Polynomial> coeffs)
      : cap_(check_cap(cap)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(cap_ + 1);
  }

  static TruncatedSeries one(int cap) {
    TruncatedSeries s(cap);
    s.coeffs_[0] = Polynomial::one();
    return s;
  }

  /// 1 + fam[1] t + fam[2] t^2 + ... + fam[cap] t^cap.
  static TruncatedSeries total_class(Family fam, int cap = kDefaultCap) {
    TruncatedSeries s = one(cap);
    for (int i = 1; i <= cap; ++i) s.coeffs_[i] = Polynomial::variable(Variable(fam, i));
    return s;
  }

  /// Lifts a polynomial in y alone: the degree-e part q*y^e becomes the
  /// coefficient of t^e (degrees beyond cap are truncated away).
  static TruncatedSeries from_y_total(const Polynomial& p, int cap) {
    TruncatedSeries s(cap);
    for (const auto& [m, c] : p.terms()) {
      for (const Factor& f : m.factors()) {
        if (f.var.family != Family::y) {
          throw precondition_error("twist series must have coefficients in y only");
        }
      }
      if (m.degree() <= cap) s.coeffs_[m.degree()].add(c, m);
    }
    return s;
  }

  int cap() const { return cap_; }

  const Polynomial& coeff(int i) const {
    if (i < 0 || i > cap_) throw precondition_error("series coefficient out of range");
    return coeffs_[i];
  }

  bool has_unit_constant() const { return coeffs_[0] == Polynomial::one(); }

  /// Cauchy product truncated at the common cap.
  TruncatedSeries mul(const TruncatedSeries& rhs) const {
    if (cap_ != rhs.cap_) throw precondition_error("series caps differ");
    TruncatedSeries out(cap_);
    for (int n = 0; n <= cap_; ++n) {
      for (int k = 0; k <= n; ++k) out.coeffs_[n] += coeffs_[k] * rhs.coeffs_[n - k];
    }
    return out;
  }

  /// Multiplicative inverse; requires constant coefficient 1.
  TruncatedSeries invert() const {
    if (!has_unit_constant()) throw precondition_error("non-unit constant term");
    TruncatedSeries out = one(cap_);
    for (int n = 1; n <= cap_; ++n) {
      Polynomial acc;
      for (int k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
      out.coeffs_[n] = -acc;
    }
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.mul(b);
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  static int check_cap(int cap) {
    if (cap < 0) throw precondition_error("series cap must be nonnegative");
    return cap;
  }

  int cap_;
  std::vector<Polynomial> coeffs_;
};

/// Coefficientwise quotient b / a of total classes: the coefficient of t^i
/// is the i-th quotient class.
inline TruncatedSeries quotient_total_class(const TruncatedSeries& b, const TruncatedSeries& a) {
  if (!b.has_unit_constant() || !a.has_unit_constant()) {
    throw precondition_error("total classes must start with 1");
  }
  return b * a.invert();
}

/// c * xi_num / xi_den; the twist series must live in the y family.
inline TruncatedSeries twist_total_class(const TruncatedSeries& c, const TruncatedSeries& xi_num,
                                         const TruncatedSeries& xi_den) {
  for (const TruncatedSeries* s : {&xi_num, &xi_den}) {
    for (int i = 0; i <= s->cap(); ++i) {
      auto fams = s->coeff(i).families();
      if (!fams.empty() && fams != std::set<Family>{Family::y}) {
        throw precondition_error("twist series must have coefficients in y only");
      }
    }
  }
  if (!xi_den.has_unit_constant()) throw precondition_error("non-unit constant term");
  return c * xi_num * xi_den.invert();
}

}  // namespace thomkit
