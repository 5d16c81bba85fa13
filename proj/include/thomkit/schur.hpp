#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "thomkit/polynomial.hpp"

namespace thomkit {

/// Weakly decreasing sequence of positive integers; the Schur basis index.
class Partition {
 public:
  Partition() = default;  // the empty partition

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
        throw precondition_error("partition parts must be weakly decreasing positives");
      }
      weight_ += parts_[i];
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }

  bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }

  /// Graded, then lexicographic; a linear extension of dominance order.
  std::strong_ordering operator<=>(const Partition& rhs) const {
    if (auto c = weight_ <=> rhs.weight_; c != 0) return c;
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  rhs.parts_.begin(), rhs.parts_.end());
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

inline std::string print(const Partition& lam) {
  std::string out = "s[";
  for (std::size_t i = 0; i < lam.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lam.parts()[i]);
  }
  return out + ']';
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int rest, int maxp) -> void {
    if (rest == 0) {
      out.emplace_back(acc);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      acc.push_back(p);
      self(self, rest - p, p);
      acc.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Schur polynomial s_lam = det(c[lam_i + j - i]) in quotient Chern classes,
/// with c[0] = 1 and c[<0] = 0. Homogeneous of degree |lam|.
inline Polynomial jacobi_trudi(const Partition& lam) {
  const auto& ps = lam.parts();
  const int n = lam.length();
  if (n == 0) return Polynomial::one();
  if (n >= 32) throw precondition_error("partition too long");
  std::map<std::uint32_t, Polynomial> memo;
  auto minor = [&](auto&& self, int row, std::uint32_t mask) -> Polynomial {
    if (row == n) return Polynomial::one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial acc;
    int pos = 0;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const int idx = ps[row] + col - row;
      if (idx >= 0) {
        const Polynomial entry =
            idx == 0 ? Polynomial::one() : Polynomial::variable(Variable(Family::c, idx));
        acc += (pos % 2 == 0 ? Rational(1) : Rational(-1)) *
               (entry * self(self, row + 1, mask & ~(1u << col)));
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(minor, 0, (1u << n) - 1);
}

namespace schur_detail {

inline Partition partition_of(const Monomial& m) {
  std::vector<int> parts;
  for (auto it = m.factors().rbegin(); it != m.factors().rend(); ++it) {
    for (int e = 0; e < it->exponent; ++e) parts.push_back(it->var.index);
  }
  return Partition(parts);
}

}  // namespace schur_detail

inline constexpr int kDefaultWeightCap = 16;

/// Expands a homogeneous c-polynomial in the Schur basis by triangular
/// elimination against Jacobi-Trudi images in graded-lex order. The c-monomial
/// c_lam is the lex-least monomial of s_lam, so peeling the lex-least
/// remaining monomial terminates.
inline std::map<Partition, Rational> to_schur(const Polynomial& p,
                                              int max_weight = kDefaultWeightCap) {
  const auto fams = p.families();
  if (!fams.empty() && fams != std::set<Family>{Family::c}) {
    throw precondition_error("Schur expansion expects a c-family polynomial");
  }
  if (!p.is_homogeneous()) {
    throw precondition_error("Schur expansion expects a homogeneous polynomial");
  }
  std::map<Partition, Rational> out;
  if (p.is_zero()) return out;
  if (*p.degree() > max_weight) throw precondition_error("degree exceeds the partition weight cap");
  Polynomial q = p;
  Partition last;
  while (!q.is_zero()) {
    const Monomial* pivot = nullptr;
    Partition lam;
    for (const auto& [m, c] : q.terms()) {
      Partition cand = schur_detail::partition_of(m);
      if (!pivot || cand < lam) {
        pivot = &m;
        lam = std::move(cand);
      }
    }
    if (!out.empty() && !(last < lam)) throw std::logic_error("elimination is not triangular");
    const Rational coeff = q.coefficient(*pivot);
    q -= coeff * jacobi_trudi(lam);
    out.emplace(lam, coeff);
    last = lam;
  }
  return out;
}

struct SchurExpansion {
  std::map<Partition, Rational> coefficients;
  bool positive = true;  // every coefficient >= 0
};

/// Positivity verdict plus the full expansion as witness either way.
inline SchurExpansion schur_positive(const Polynomial& p, int max_weight = kDefaultWeightCap) {
  SchurExpansion out{to_schur(p, max_weight), true};
  for (const auto& [lam, c] : out.coefficients) {
    if (c < 0) out.positive = false;
  }
  return out;
}

}  // namespace thomkit
