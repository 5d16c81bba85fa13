#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thomkit/lowering.hpp"

namespace thomkit {

/// Truncation window for Thom series: a generator emits exactly the terms
/// all of whose d-indices have absolute value <= max_abs_index.
struct Window {
  int max_abs_index;
  explicit Window(int w) : max_abs_index(w) {
    if (w < 1) throw precondition_error("window must be a positive integer");
  }
};

struct AlgebraEntry {
  std::string_view name;
  int delta;                 // complex dimension of the local algebra
  int gamma;                 // the second codimension invariant
  std::optional<int> defect; // minimal relations-minus-generators, if derived
  std::string_view presentation;
  int k_eta;                 // proportionality constant; 1 for all entries here
};

struct ThomSeriesEntry {
  AlgebraEntry algebra;
  // Window up to which coefficients are validated; nullopt when the series
  // is finite/complete. Strict mode refuses windows beyond this.
  std::optional<int> anchored_window;
  std::string_view notes;
  Polynomial (*generate)(Window);
};

namespace catalog_detail {

inline Polynomial dterm(Rational coeff, std::initializer_list<int> indices) {
  std::vector<Factor> fs;
  for (int i : indices) fs.push_back({Variable(Family::d, i), 1});
  return Polynomial::term(std::move(coeff), fs);
}

inline Rational pow2(int e) {
  // 2^e for any integer e
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(1, BigInt(1) << -e);
}

inline Polynomial gen_A0(Window) { return Polynomial::one(); }

inline Polynomial gen_A1(Window) { return dterm(1, {0}); }

// d0^2 + d-1 d1 + 2 d-2 d2 + 4 d-3 d3 + 8 d-4 d4 + ... ; the coefficient of
// d[-i]d[i] is 2^(i-1) for i >= 1.
inline Polynomial gen_A2(Window w) {
  Polynomial out;
  for (int i = 0; i <= w.max_abs_index; ++i) {
    out += dterm(i == 0 ? Rational(1) : pow2(i - 1), {-i, i});
  }
  return out;
}

inline Polynomial gen_A3(Window w);   // needs aij, defined below
inline Polynomial gen_I22(Window w);

}  // namespace catalog_detail

/// Coefficient a_{i,j} of u^i v^j in (u(1-u)/(1-3u) + v(1-v)/(1-3v)) / (1-u-v),
/// by expanding the numerator as a geometric series and convolving with the
/// binomial expansion of 1/(1-u-v).
inline Rational aij(int i, int j) {
  if (i < 0 || j < 0) return 0;
  auto f = [](int k) -> Rational {
    // u(1-u) * sum 3^m u^m  =>  coefficient of u^k
    if (k < 1) return 0;
    Rational out = Rational(BigInt(boost::multiprecision::pow(BigInt(3), k - 1)));
    if (k >= 2) out -= Rational(BigInt(boost::multiprecision::pow(BigInt(3), k - 2)));
    return out;
  };
  Rational acc = 0;
  for (int k = 1; k <= i; ++k) acc += f(k) * Rational(lowering_detail::binomial(i - k + j, j));
  for (int k = 1; k <= j; ++k) acc += f(k) * Rational(lowering_detail::binomial(i + j - k, i));
  return acc;
}

namespace catalog_detail {

// Three sums, all terms d-degree 0 with three factors. Range policy: the
// first sum runs over i >= 0, the middle (1/3) 2^i 3^j sum over i, j >= 1,
// the a_{i,j} sum over i, j >= 0; fixed so specializations are integral and
// Schur-positive and the equidimensional value is the classical one.
inline Polynomial gen_A3(Window w) {
  const int W = w.max_abs_index;
  Polynomial out;
  for (int i = 0; i <= W; ++i) out += dterm(pow2(i), {-i, 0, i});
  for (int i = 1; i <= W; ++i) {
    for (int j = 1; i + j <= W; ++j) {
      out += dterm(pow2(i) * Rational(BigInt(boost::multiprecision::pow(BigInt(3), j - 1))),
                   {-i, -j, i + j});
    }
  }
  for (int i = 0; i <= W; ++i) {
    for (int j = 0; i + j <= W; ++j) {
      out += dterm(aij(i, j) / 2, {-i - j, i, j});
    }
  }
  return out;
}

// All terms d-degree 1 with three factors; every sum starts at i, j = 1.
// Provisional entry (machine evidence, no closed proof).
inline Polynomial gen_I22(Window w) {
  const int W = w.max_abs_index;
  Polynomial out;
  for (int i = 1; i <= W; ++i) out += dterm(pow2(i - 2), {-i, 1, i});
  for (int i = 1; i + 1 <= W; ++i) out += dterm(-pow2(i - 1), {-i, 0, i + 1});
  for (int i = 1; i <= W; ++i) {
    for (int j = 1; i + j - 1 <= W && j <= W; ++j) {
      out += dterm(Rational(lowering_detail::binomial(i + j - 2, i - 1)) / 2, {-i - j + 1, i, j});
    }
  }
  return out;
}

}  // namespace catalog_detail

inline const std::vector<ThomSeriesEntry>& catalog() {
  static const std::vector<ThomSeriesEntry> entries{
      {{"A0", 1, 0, 0, "C", 1},
       std::nullopt,
       "complete: the series is the constant 1",
       &catalog_detail::gen_A0},
      {{"A1", 2, 1, 0, "C[x]/(x^2)", 1},
       std::nullopt,
       "complete: the single term d[0]",
       &catalog_detail::gen_A1},
      {{"A2", 3, 2, 0, "C[x]/(x^3)", 1},
       4,
       "coefficient of d[-i]*d[i] is 2^(i-1) for i >= 1; terms are listed "
       "through i = 4, larger windows extrapolate the doubling rule",
       &catalog_detail::gen_A2},
      {{"A3", 4, 3, 0, "C[x]/(x^4)", 1},
       4,
       "range policy: first sum i >= 0, middle sum i,j >= 1, a_{i,j} sum "
       "i,j >= 0; chosen so tp at relative dimension 0 is integral, "
       "Schur-positive and equals c1^3 + 3*c1*c2 + 2*c3",
       &catalog_detail::gen_A3},
      {{"I22", 4, 4, 0, "C[x,y]/(xy, x^2+y^2)", 1},
       4,
       "provisional: supported by machine evidence, no closed proof",
       &catalog_detail::gen_I22},
  };
  return entries;
}

inline const ThomSeriesEntry& catalog_entry(std::string_view name) {
  for (const ThomSeriesEntry& e : catalog()) {
    if (e.algebra.name == name) return e;
  }
  throw precondition_error("unknown catalog entry: " + std::string(name));
}

/// Finite truncation of the Thom series of the named algebra. In strict mode
/// windows beyond the anchored range are refused.
inline Polynomial ts_terms(std::string_view name, Window w, bool strict = false) {
  const ThomSeriesEntry& e = catalog_entry(name);
  if (strict && e.anchored_window && w.max_abs_index > *e.anchored_window) {
    throw precondition_error("window " + std::to_string(w.max_abs_index) +
                             " exceeds the validated range of " + std::string(name) + " (" +
                             std::to_string(*e.anchored_window) + ")");
  }
  return e.generate(w);
}

/// d[i] |-> c[i+k+1] with k the relative dimension m - n, then normalize
/// (c[0] dropped, negative indices kill the term).
inline Polynomial specialize(const Polynomial& dpoly, int reldim) {
  const auto fams = dpoly.families();
  if (!fams.empty() && fams != std::set<Family>{Family::d}) {
    throw precondition_error("specialization expects a d-family polynomial");
  }
  Polynomial out;
  for (const auto& [m, c] : dpoly.terms()) {
    std::vector<Factor> raw;
    raw.reserve(m.factors().size());
    for (const Factor& f : m.factors()) {
      raw.push_back({Variable(Family::c, f.var.index + reldim + 1), f.exponent});
    }
    out += Polynomial::term(c, raw);
  }
  return out;
}

/// Thom polynomial of the named algebra at relative dimension k.
inline Polynomial thom_polynomial(std::string_view name, int reldim, Window w,
                                  bool strict = false) {
  return specialize(ts_terms(name, w, strict), reldim);
}

/// det(d[r-1+j-i]) for i, j = 1..r. Every term has r factors, degree r(r-1).
inline Polynomial gtp_sigma_r(int r) {
  if (r < 1) throw precondition_error("corank must be positive");
  std::map<std::uint32_t, Polynomial> memo;
  const std::uint32_t full = (r >= 32) ? 0 : ((1u << r) - 1);
  if (r >= 32) throw precondition_error("corank too large");
  auto minor = [&](auto&& self, int row, std::uint32_t mask) -> Polynomial {
    if (row == r) return Polynomial::one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial acc;
    int pos = 0;
    for (int col = 0; col < r; ++col) {
      if (!(mask & (1u << col))) continue;
      Polynomial entry = Polynomial::variable(Variable(Family::d, r - 1 + col - row));
      Polynomial sub = self(self, row + 1, mask & ~(1u << col));
      acc += (pos % 2 == 0 ? Rational(1) : Rational(-1)) * (entry * sub);
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(minor, 0, full);
}

/// Contact-orbit codimension k(delta-1) + gamma. Strict mode enforces the
/// existence condition k >= defect when the defect is known.
inline int codim_contact(const AlgebraEntry& entry, int reldim, bool strict = false) {
  if (strict && entry.defect && reldim < *entry.defect) {
    throw precondition_error("relative dimension below the defect of " +
                             std::string(entry.name));
  }
  return reldim * (entry.delta - 1) + entry.gamma;
}

struct BoardmanSymbol {
  int i;
  int j;  // 0 <= j <= i
  BoardmanSymbol(int i_, int j_) : i(i_), j(j_) {
    if (i < 1 || j < 0 || j > i) throw precondition_error("need i >= 1, 0 <= j <= i");
  }
};

namespace catalog_detail {
inline int exact_half(long long n, const char* what) {
  if (n % 2 != 0) throw precondition_error(std::string(what) + " is not an integer");
  return static_cast<int>(n / 2);
}
}  // namespace catalog_detail

/// Codimension of the second-order Thom-Boardman locus with symbol (i, j)
/// at relative dimension k.
inline int codim_sigma_ij(BoardmanSymbol sym, int reldim) {
  const long long i = sym.i, j = sym.j, k = reldim;
  const long long half = j * ((i + k) * (2 * i - j + 1) - 2 * (i - j));
  return static_cast<int>((i + k) * i) + catalog_detail::exact_half(half, "codimension");
}

struct SigmaShape {
  int degree;   // d-degree of the Thom series
  int factors;  // factor count of every term
  bool operator==(const SigmaShape&) const = default;
};

/// Degree and factor count of the (i, j) Thom series: degree
/// i(i-1) + j(2i^2 - ij - 3i + 3j - 1)/2 and i(j+1) - C(j,2) factors.
/// For j = 0 this reduces to (r(r-1), r).
inline SigmaShape shape_sigma_ij(BoardmanSymbol sym) {
  const long long i = sym.i, j = sym.j;
  const int degree = static_cast<int>(i * (i - 1)) +
                     catalog_detail::exact_half(j * (2 * i * i - i * j - 3 * i + 3 * j - 1),
                                                "series degree");
  const int factors =
      static_cast<int>(i * (j + 1)) - catalog_detail::exact_half(j * (j - 1), "factor count");
  return {degree, factors};
}

}  // namespace thomkit
