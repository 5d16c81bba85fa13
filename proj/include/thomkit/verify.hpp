#pragma once

#include <random>
#include <string>
#include <vector>

#include "thomkit/catalog.hpp"
#include "thomkit/io.hpp"
#include "thomkit/schur.hpp"

namespace thomkit {

/// Outcome of one mechanical check. `anchor` names the stated fact being
/// reproduced, `source` says where the expected values come from, and a
/// nonzero `seed` marks randomized checks (rerunning with the same seed
/// reproduces the report).
struct CheckReport {
  std::string name;
  bool passed = true;
  std::string details;
  std::string anchor;
  std::string source;
  std::uint64_t seed = 0;
};

inline CheckReport make_report(std::string name, std::string anchor, std::string source,
                               std::uint64_t seed = 0) {
  CheckReport r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.source = std::move(source);
  r.seed = seed;
  return r;
}

/// Deterministic generator; avoids std distributions so the same seed gives
/// the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }

 private:
  std::mt19937_64 gen_;
};

/// Random nonzero homogeneous polynomial of the given degree: up to
/// max_terms monomials (random compositions of the degree), coefficients
/// of magnitude 1..9.
inline Polynomial random_homogeneous(Family fam, int degree, int max_terms, Rng& rng) {
  for (;;) {
    Polynomial p;
    const int terms = rng.uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      std::vector<Factor> raw;
      int rest = degree;
      while (rest > 0) {
        const int idx = rng.uniform(1, rest);
        raw.push_back({Variable(fam, idx), 1});
        rest -= idx;
      }
      const int coeff = rng.uniform(1, 9) * (rng.uniform(0, 1) ? 1 : -1);
      p += Polynomial::term(coeff, raw);
    }
    if (!p.is_zero()) return p;
  }
}

namespace verify_detail {

inline void expect_eq(CheckReport& r, const Polynomial& expected, const Polynomial& actual,
                      const std::string& what) {
  if (expected == actual) return;
  r.passed = false;
  if (!r.details.empty()) r.details += "; ";
  r.details += what + ": expected " + print(expected) + ", got " + print(actual) +
               " (difference " + print(actual - expected) + ")";
}

inline void note(CheckReport& r, const std::string& msg) {
  if (!r.details.empty()) r.details += "; ";
  r.details += msg;
}

}  // namespace verify_detail

/// Random oracle for the sharp/flat equivalence: for homogeneous p in the cs
/// family, the y^i part of p under the (1+yt) twist equals the i-fold
/// lowering of p read in the c family (both sides homogeneous of degree
/// l - i, so the y-exponent is the lowering order).
inline CheckReport check_flat_oracle(int trials, int max_degree, std::uint64_t seed) {
  CheckReport r = make_report(
      "flat.random_oracle",
      "sharp substitution collects to lowering images",
      "oracle equivalence of two independent routes",
      seed);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int degree = rng.uniform(1, max_degree);
    const Polynomial p = random_homogeneous(Family::cs, degree, 6, rng);
    const TruncatedSeries num =
        TruncatedSeries::from_y_total(parse_polynomial("1 + y"), degree);
    const YExpansion exp = twist_expand(p, num, TruncatedSeries::one(degree), degree);
    const Polynomial pc = retag(p, Family::cs, Family::c);
    for (int i = 0; i <= degree; ++i) {
      verify_detail::expect_eq(r, lower(pc, i), exp.part(i),
                               "trial " + std::to_string(t) + ", i = " + std::to_string(i) +
                                   ", p = " + print(p));
      if (!r.passed) return r;
    }
  }
  verify_detail::note(r, std::to_string(trials) + " random polynomials, degree <= " +
                             std::to_string(max_degree) + ", exact equality throughout");
  return r;
}

/// Gap structure between a pair of Thom polynomials: lowering by the gap
/// reproduces the lower polynomial (times k), lowering further vanishes.
inline CheckReport check_tpflat_pair(std::string name, const Polynomial& p_sharp,
                                     const Polynomial& q, int gap, int expected_k) {
  if (!p_sharp.is_homogeneous() || !q.is_homogeneous()) {
    throw precondition_error("gap check expects homogeneous polynomials");
  }
  if (p_sharp.degree().value_or(0) - q.degree().value_or(0) != gap) {
    throw precondition_error("degree difference does not match the gap");
  }
  CheckReport r = make_report(
      std::move(name),
      "lowering by the codimension gap, vanishing above it",
      "catalog specializations");
  verify_detail::expect_eq(r, Rational(expected_k) * q, lower(p_sharp, gap),
                           "at the gap " + std::to_string(gap));
  for (int i = gap + 1; i <= gap + 3; ++i) {
    verify_detail::expect_eq(r, Polynomial{}, lower(p_sharp, i),
                             "above the gap, i = " + std::to_string(i));
  }
  if (r.passed) verify_detail::note(r, "gap " + std::to_string(gap) + " as stated");
  return r;
}

/// The quadratic-twist product example: expands the stated degree-7 Thom
/// polynomial under (1+2yt)/(1+yt) and asserts the four stated parts.
inline CheckReport check_product_masik() {
  CheckReport r = make_report(
      "masik.product_twist",
      "product twist of the degree-7 polynomial, parts y^7..y^4",
      "printed example");
  const Polynomial tp_sharp = parse_polynomial(
      "2*cs[1]*cs[2]^3 - 2*cs[1]^2*cs[2]*cs[3] + 2*cs[2]^2*cs[3] + 2*cs[1]*cs[3]^2"
      " - 4*cs[1]*cs[2]*cs[4] + 2*cs[3]*cs[4] - 2*cs[2]*cs[5]");
  const int cap = 7;
  const TruncatedSeries num = TruncatedSeries::from_y_total(parse_polynomial("1 + 2*y"), cap);
  const TruncatedSeries den = TruncatedSeries::from_y_total(parse_polynomial("1 + y"), cap);
  const YExpansion exp = twist_expand(tp_sharp, num, den, cap);
  verify_detail::expect_eq(r, Polynomial{}, exp.part(7), "part y^7");
  verify_detail::expect_eq(r, Polynomial{}, exp.part(6), "part y^6");
  verify_detail::expect_eq(r, parse_polynomial("4*c[1]^2 + 4*c[2]"), exp.part(5), "part y^5");
  verify_detail::expect_eq(r, parse_polynomial("2*c[1]*c[2] - 2*c[1]^3 + 20*c[3]"), exp.part(4),
                           "part y^4");
  if (!r.passed) {
    verify_detail::note(r,
                        "the stated y^4 value is inconsistent with the stated inputs; exact "
                        "recomputation of the verbatim polynomial under this twist gives " +
                            print(exp.part(4)));
  }
  return r;
}

namespace verify_detail {

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  return seed * 0x9e3779b97f4a7c15ULL + salt;
}

inline Polynomial tp(std::string_view name, int k) {
  return thom_polynomial(name, k, Window(4));
}

inline std::vector<CheckReport> suite_flat(std::uint64_t seed) {
  std::vector<CheckReport> out;
  {
    CheckReport r = make_report(
        "flat.monomial_square",
        "single-monomial sharp expansion",
        "convention");
    const Polynomial p = parse_polynomial("cs[2]^2");
    const TruncatedSeries num = TruncatedSeries::from_y_total(parse_polynomial("1 + y"), 4);
    const YExpansion exp = twist_expand(p, num, TruncatedSeries::one(4), 4);
    expect_eq(r, parse_polynomial("c[1]^2"), exp.part(2), "part y^2");
    expect_eq(r, lower(parse_polynomial("c[2]^2"), 2), exp.part(2), "lowering route");
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "flat.a2_sharp_display",
        "cusp polynomial one dimension up collapses to the cusp",
        "printed example");
    const Polynomial p = parse_polynomial("cs[2]^2 + cs[1]*cs[3] + 2*cs[4]");
    const TruncatedSeries num = TruncatedSeries::from_y_total(parse_polynomial("1 + y"), 4);
    const YExpansion exp = twist_expand(p, num, TruncatedSeries::one(4), 4);
    expect_eq(r, parse_polynomial("c[1]^2 + c[2]"), exp.part(2), "part y^2");
    out.push_back(std::move(r));
  }
  out.push_back(check_flat_oracle(200, 8, mix(seed, 1)));
  return out;
}

inline std::vector<CheckReport> suite_tpflat() {
  std::vector<CheckReport> out;
  for (int k = 0; k <= 2; ++k) {
    out.push_back(check_tpflat_pair("tpflat.a2_k" + std::to_string(k + 1), tp("A2", k + 1),
                                    tp("A2", k), 2, 1));
  }
  out.push_back(check_tpflat_pair("tpflat.a1_k1", tp("A1", 1), tp("A1", 0), 1, 1));
  out.push_back(check_tpflat_pair("tpflat.a3_k1", tp("A3", 1), tp("A3", 0), 3, 1));
  out.push_back(check_tpflat_pair("tpflat.i22_k1", tp("I22", 1), tp("I22", 0), 3, 1));
  for (int r = 2; r <= 3; ++r) {
    out.push_back(check_tpflat_pair("tpflat.sigma" + std::to_string(r) + "_k1",
                                    specialize(gtp_sigma_r(r), 1), specialize(gtp_sigma_r(r), 0),
                                    r, 1));
  }
  return out;
}

inline std::vector<CheckReport> suite_shapes() {
  std::vector<CheckReport> out;
  {
    CheckReport r = make_report(
        "shapes.series_terms",
        "every series term has delta-1 factors and degree gamma-delta+1",
        "structural theorem");
    for (const ThomSeriesEntry& e : catalog()) {
      for (int W = 1; W <= 4; ++W) {
        const Polynomial ts = e.generate(Window(W));
        for (const auto& [m, c] : ts.terms()) {
          if (m.factor_count() != e.algebra.delta - 1 ||
              m.degree() != e.algebra.gamma - e.algebra.delta + 1) {
            r.passed = false;
            note(r, std::string(e.algebra.name) + " W=" + std::to_string(W) +
                        ": offending term " + print(m));
          }
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "shapes.gtp_determinant",
        "corank-r determinant has r-factor terms of degree r(r-1)",
        "structural theorem");
    for (int rr = 1; rr <= 4; ++rr) {
      const Polynomial g = gtp_sigma_r(rr);
      for (const auto& [m, c] : g.terms()) {
        if (m.factor_count() != rr || m.degree() != rr * (rr - 1)) {
          r.passed = false;
          note(r, "r=" + std::to_string(rr) + ": offending term " + print(m));
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "shapes.sigma_ij_reduction",
        "(i,0) shape reduces to the corank shape (r(r-1), r)",
        "formula evaluation");
    for (int rr = 1; rr <= 4; ++rr) {
      const SigmaShape s = shape_sigma_ij(BoardmanSymbol(rr, 0));
      if (!(s == SigmaShape{rr * (rr - 1), rr})) {
        r.passed = false;
        note(r, "r=" + std::to_string(rr));
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "shapes.codim_sigma_j0",
        "codim of the corank locus is i(i+k)",
        "formula evaluation");
    for (int i = 1; i <= 4; ++i) {
      for (int k = 0; k <= 3; ++k) {
        if (codim_sigma_ij(BoardmanSymbol(i, 0), k) != i * (i + k)) {
          r.passed = false;
          note(r, "i=" + std::to_string(i) + " k=" + std::to_string(k));
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "shapes.codim_degree_identity",
        "codim equals series degree plus (k+1) times the factor count",
        "derived consistency of the two formulas");
    for (int i = 1; i <= 4; ++i) {
      for (int j = 0; j <= i; ++j) {
        const SigmaShape s = shape_sigma_ij(BoardmanSymbol(i, j));
        for (int k = 0; k <= 3; ++k) {
          if (codim_sigma_ij(BoardmanSymbol(i, j), k) != s.degree + (k + 1) * s.factors) {
            r.passed = false;
            note(r, "(" + std::to_string(i) + "," + std::to_string(j) + ") k=" + std::to_string(k));
          }
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "shapes.codim_contact",
        "contact codimension k(delta-1)+gamma",
        "printed values");
    if (codim_contact(catalog_entry("A2").algebra, 0) != 2) r.passed = false;
    if (codim_contact(catalog_entry("A3").algebra, 1) != 6) r.passed = false;
    for (int k = 0; k <= 5; ++k) {
      if (codim_contact(catalog_entry("A0").algebra, k) != 0) r.passed = false;
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<CheckReport> suite_schur(std::uint64_t seed) {
  std::vector<CheckReport> out;
  {
    CheckReport r = make_report(
        "schur.known_expansions",
        "cusp specializations in the Schur basis",
        "derived by triangular elimination");
    const auto e2 = to_schur(parse_polynomial("c[1]^2 + c[2]"));
    if (e2 != std::map<Partition, Rational>{{Partition({1, 1}), 1}, {Partition({2}), 2}}) {
      r.passed = false;
      note(r, "degree-2 expansion is off");
    }
    const auto e4 = to_schur(parse_polynomial("c[2]^2 + c[1]*c[3] + 2*c[4]"));
    if (e4 != std::map<Partition, Rational>{
                  {Partition({2, 2}), 1}, {Partition({3, 1}), 2}, {Partition({4}), 4}}) {
      r.passed = false;
      note(r, "degree-4 expansion is off");
    }
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "schur.roundtrip_random",
        "Schur expansion followed by Jacobi-Trudi reproduces the input",
        "round-trip identity",
        mix(seed, 2));
    Rng rng(r.seed);
    for (int t = 0; t < 100; ++t) {
      const Polynomial p = random_homogeneous(Family::c, rng.uniform(1, 8), 6, rng);
      Polynomial back;
      for (const auto& [lam, c] : to_schur(p)) back += c * jacobi_trudi(lam);
      expect_eq(r, p, back, "trial " + std::to_string(t));
      if (!r.passed) break;
    }
    if (r.passed) note(r, "100 random homogeneous polynomials of degree <= 8");
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "schur.gtp_rectangles",
        "corank specializations are single rectangle Schur terms",
        "determinantal identity");
    for (int rr = 1; rr <= 3; ++rr) {
      for (int k = 0; k <= 2; ++k) {
        const auto exp = to_schur(specialize(gtp_sigma_r(rr), k));
        const Partition rect(std::vector<int>(rr, rr + k));
        if (exp != std::map<Partition, Rational>{{rect, 1}}) {
          r.passed = false;
          note(r, "r=" + std::to_string(rr) + " k=" + std::to_string(k));
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "schur.catalog_positivity",
        "catalog specializations have nonnegative Schur coefficients",
        "stated positivity property");
    for (std::string_view nm : {"A0", "A1", "A2", "I22", "A3"}) {
      for (int W = 1; W <= 4; ++W) {
        for (int k = 0; k <= 3; ++k) {
          const auto verdict = schur_positive(thom_polynomial(nm, k, Window(W)));
          if (!verdict.positive) {
            r.passed = false;
            note(r, std::string(nm) + " W=" + std::to_string(W) + " k=" + std::to_string(k));
          }
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<CheckReport> suite_catalog() {
  std::vector<CheckReport> out;
  {
    CheckReport r = make_report(
        "catalog.a2_specializations",
        "cusp Thom polynomials at relative dimension 0 and 1",
        "printed values");
    expect_eq(r, parse_polynomial("c[1]^2 + c[2]"), tp("A2", 0), "k=0");
    expect_eq(r, parse_polynomial("c[2]^2 + c[1]*c[3] + 2*c[4]"), tp("A2", 1), "k=1");
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "catalog.a2_series_display",
        "cusp series terms through window 4",
        "printed series");
    expect_eq(r,
              parse_polynomial("d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2] + 4*d[-3]*d[3] + 8*d[-4]*d[4]"),
              ts_terms("A2", Window(4)), "window 4");
    expect_eq(r, parse_polynomial("d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2]"), ts_terms("A2", Window(2)),
              "window 2");
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report("catalog.a0_a1", "embedding and fold series", "printed series");
    expect_eq(r, Polynomial::one(), ts_terms("A0", Window(4)), "A0 series");
    expect_eq(r, parse_polynomial("d[0]"), ts_terms("A1", Window(4)), "A1 series");
    expect_eq(r, Polynomial::one(), tp("A0", 2), "A0 at k=2");
    expect_eq(r, parse_polynomial("c[3]"), tp("A1", 2), "A1 at k=2");
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "catalog.integrality",
        "specializations have integer coefficients even where series coefficients are fractional",
        "stated integrality of the proportionality constants");
    for (std::string_view nm : {"A0", "A1", "A2", "I22", "A3"}) {
      for (int W = 1; W <= 4; ++W) {
        for (int k = 0; k <= 3; ++k) {
          const Polynomial value = thom_polynomial(nm, k, Window(W));
          for (const auto& [m, c] : value.terms()) {
            if (denominator(c) != 1) {
              r.passed = false;
              note(r, std::string(nm) + " W=" + std::to_string(W) + " k=" + std::to_string(k) +
                          ": " + to_string(c) + "*" + print(m));
            }
          }
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "catalog.a3_range_policy",
        "swallowtail series range policy reconciliation",
        "classically tabulated equidimensional value");
    expect_eq(r, parse_polynomial("c[1]^3 + 3*c[1]*c[2] + 2*c[3]"), tp("A3", 0), "k=0");
    const auto verdict = schur_positive(tp("A3", 0));
    if (!verdict.positive) {
      r.passed = false;
      note(r, "k=0 value is not Schur-positive");
    }
    note(r, "policy: " + std::string(catalog_entry("A3").notes));
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "catalog.i22_window2",
        "corank-two series terms through window 2",
        "direct evaluation of the printed sums (provisional entry)");
    expect_eq(r, parse_polynomial("d[-1]*d[1]^2 - d[-1]*d[0]*d[2] + 2*d[-2]*d[1]*d[2]"),
              ts_terms("I22", Window(2)), "window 2");
    out.push_back(std::move(r));
  }
  {
    CheckReport r = make_report(
        "catalog.aij_table",
        "generating-function coefficients",
        "geometric-series expansion");
    if (aij(0, 0) != 0 || aij(1, 0) != 1 || aij(0, 1) != 1 || aij(1, 1) != 2 || aij(2, 1) != 5 ||
        aij(3, 3) != 48) {
      r.passed = false;
      note(r, "small values are off");
    }
    for (int i = 0; i <= 8; ++i) {
      for (int j = 0; j <= 8; ++j) {
        if (aij(i, j) != aij(j, i) || aij(i, j) < 0) {
          r.passed = false;
          note(r, "symmetry/nonnegativity fails at " + std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace verify_detail

/// Runs one named suite (or all of them). Reports come back in a fixed
/// order; randomized checks derive their streams from the given seed.
inline std::vector<CheckReport> run_suite(std::string_view name, std::uint64_t seed = 1) {
  using namespace verify_detail;
  std::vector<CheckReport> out;
  bool known = false;
  auto want = [&](std::string_view s) { return name == "all" || name == s; };
  if (want("flat")) {
    auto v = suite_flat(seed);
    out.insert(out.end(), v.begin(), v.end());
    known = true;
  }
  if (want("tpflat")) {
    auto v = suite_tpflat();
    out.insert(out.end(), v.begin(), v.end());
    known = true;
  }
  if (want("shapes")) {
    auto v = suite_shapes();
    out.insert(out.end(), v.begin(), v.end());
    known = true;
  }
  if (want("schur")) {
    auto v = suite_schur(seed);
    out.insert(out.end(), v.begin(), v.end());
    known = true;
  }
  if (want("masik")) {
    out.push_back(check_product_masik());
    known = true;
  }
  if (want("catalog")) {
    auto v = suite_catalog();
    out.insert(out.end(), v.begin(), v.end());
    known = true;
  }
  if (!known) throw precondition_error("unknown suite: " + std::string(name));
  return out;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace thomkit
