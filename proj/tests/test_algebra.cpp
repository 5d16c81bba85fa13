#include <catch2/catch_amalgamated.hpp>

#include "thomkit/io.hpp"
#include "thomkit/series.hpp"
#include "thomkit/verify.hpp"

using namespace thomkit;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

// Small mixed-family polynomial generator for ring-axiom checks.
Polynomial random_mixed(Rng& rng) {
  Polynomial p;
  const int terms = rng.uniform(0, 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<Factor> raw;
    const int nf = rng.uniform(1, 3);
    for (int f = 0; f < nf; ++f) {
      switch (rng.uniform(0, 2)) {
        case 0:
          raw.push_back({Variable(Family::c, rng.uniform(1, 5)), rng.uniform(1, 2)});
          break;
        case 1:
          raw.push_back({Variable(Family::d, rng.uniform(-3, 3)), rng.uniform(1, 2)});
          break;
        default:
          raw.push_back({Variable(Family::y, 0), rng.uniform(1, 2)});
          break;
      }
    }
    p += Polynomial::term(rng.uniform(-9, 9), raw);
  }
  return p;
}

}  // namespace

TEST_CASE("rationals stay in canonical form") {
  Rational r(4, 6);
  CHECK(numerator(r) == 2);
  CHECK(denominator(r) == 3);
  CHECK(to_string(Rational(-4, 8)) == "-1/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(denominator(Rational(0)) == 1);
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("x"), parse_error);
}

TEST_CASE("normalize applies the index conventions") {
  CHECK(P("c[0]*c[2]") == P("c[2]"));
  CHECK(P("c[-1]*c[3]").is_zero());
  CHECK(P("a[0]") == P("1"));
  CHECK(P("b[-2]").is_zero());

  const Polynomial d = P("d[-2]*d[2]");
  REQUIRE(d.terms().size() == 1);
  CHECK(d.terms().begin()->first.degree() == 0);
  CHECK(d.terms().begin()->first.factor_count() == 2);
  CHECK(P("d[0]") == Polynomial::variable(Variable(Family::d, 0)));

  const std::vector<Factor> bad{{Variable(Family::c, 1), 0}};
  CHECK_THROWS_AS(Monomial::normalize(bad), std::invalid_argument);
  CHECK_THROWS_AS(Variable(Family::y, 2), std::invalid_argument);
}

TEST_CASE("normalize is idempotent") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = random_mixed(rng);
    for (const auto& [m, c] : p.terms()) {
      auto again = Monomial::normalize(m.factors());
      REQUIRE(again.has_value());
      CHECK(*again == m);
    }
  }
}

TEST_CASE("polynomial ring operations") {
  CHECK(P("c[1] + c[2]") * P("c[1] - c[2]") == P("c[1]^2 - c[2]^2"));
  CHECK(Polynomial::one() * P("d[-1]*d[1] + 3*c[2]") == P("d[-1]*d[1] + 3*c[2]"));
  CHECK(P("d[0] + d[1]") * P("d[0] + d[1]") == P("d[0]^2 + 2*d[0]*d[1] + d[1]^2"));
  CHECK((P("c[1]") - P("c[1]")).is_zero());
  CHECK(Rational(1, 2) * P("2*c[3]") == P("c[3]"));
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const Polynomial a = random_mixed(rng), b = random_mixed(rng), c = random_mixed(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("multiplication adds degrees of homogeneous inputs") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    const int da = rng.uniform(1, 5), db = rng.uniform(1, 5);
    const Polynomial a = random_homogeneous(Family::c, da, 4, rng);
    const Polynomial b = random_homogeneous(Family::c, db, 4, rng);
    const Polynomial prod = a * b;
    if (prod.is_zero()) continue;
    CHECK(prod.is_homogeneous());
    CHECK(prod.degree() == da + db);
  }
}

TEST_CASE("series inversion expands geometrically") {
  const TruncatedSeries a = TruncatedSeries::total_class(Family::a, 2);
  const TruncatedSeries expected(2, {P("1"), P("-a[1]"), P("a[1]^2 - a[2]")});
  CHECK(a.invert() == expected);

  const TruncatedSeries oneyt = TruncatedSeries::from_y_total(P("1 + y"), 3);
  const TruncatedSeries geo(3, {P("1"), P("-y"), P("y^2"), P("-y^3")});
  CHECK(oneyt.invert() == geo);
}

TEST_CASE("series multiplication truncates the Cauchy product") {
  const TruncatedSeries s(2, {P("1"), P("c[1]"), Polynomial{}});
  const TruncatedSeries t(2, {P("1"), P("-c[1]"), Polynomial{}});
  const TruncatedSeries expected(2, {P("1"), Polynomial{}, P("-c[1]^2")});
  CHECK(s * t == expected);
}

TEST_CASE("series inverse is two-sided up to every cap") {
  Rng rng(19);
  for (int cap = 0; cap <= 12; ++cap) {
    TruncatedSeries s = TruncatedSeries::one(cap);
    std::vector<Polynomial> coeffs{P("1")};
    for (int i = 1; i <= cap; ++i) coeffs.push_back(random_mixed(rng));
    s = TruncatedSeries(cap, coeffs);
    CHECK(s * s.invert() == TruncatedSeries::one(cap));
    CHECK(s.invert() * s == TruncatedSeries::one(cap));
  }
}

TEST_CASE("series preconditions") {
  CHECK_THROWS_AS(TruncatedSeries::total_class(Family::a, 2) * TruncatedSeries::one(3),
                  precondition_error);
  const TruncatedSeries nonunit(2, {P("2"), P("a[1]"), Polynomial{}});
  CHECK_THROWS_AS(nonunit.invert(), precondition_error);
  CHECK_THROWS_AS(quotient_total_class(nonunit, TruncatedSeries::one(2)), precondition_error);
  CHECK_THROWS_AS(TruncatedSeries::from_y_total(P("c[1] + y"), 3), precondition_error);
}

TEST_CASE("quotient and twist satisfy their defining identities") {
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const int cap = rng.uniform(1, 6);
    auto random_total = [&](Family fam) {
      std::vector<Polynomial> coeffs{P("1")};
      for (int i = 1; i <= cap; ++i) {
        coeffs.push_back(Rational(rng.uniform(-4, 4)) *
                         Polynomial::variable(Variable(fam, i)));
      }
      return TruncatedSeries(cap, coeffs);
    };
    const TruncatedSeries a = random_total(Family::a), b = random_total(Family::b);
    CHECK(quotient_total_class(b, a) * a == b);

    auto random_y_total = [&] {
      std::vector<Polynomial> coeffs{P("1")};
      for (int i = 1; i <= cap; ++i) {
        coeffs.push_back(Rational(rng.uniform(-3, 3)) *
                         pow(Polynomial::variable(Variable(Family::y, 0)), i));
      }
      return TruncatedSeries(cap, coeffs);
    };
    const TruncatedSeries num = random_y_total(), den = random_y_total();
    const TruncatedSeries c = TruncatedSeries::total_class(Family::c, cap);
    CHECK(twist_total_class(c, num, den) * den == c * num);
  }
}

TEST_CASE("quotient total class") {
  const int cap = 2;
  const TruncatedSeries one = TruncatedSeries::one(cap);
  const TruncatedSeries b(cap, {P("1"), P("b[1]"), Polynomial{}});
  CHECK(quotient_total_class(b, one) == b);

  const TruncatedSeries a = TruncatedSeries::total_class(Family::a, cap);
  CHECK(quotient_total_class(a, a) == TruncatedSeries::one(cap));

  const TruncatedSeries a1(cap, {P("1"), P("a[1]"), Polynomial{}});
  const TruncatedSeries expected(cap, {P("1"), P("-a[1]"), P("a[1]^2")});
  CHECK(quotient_total_class(one, a1) == expected);

  // quotient classes in a- and b-variables: c1 = b1 - a1, c2 = b2 - a1 b1 + a1^2 - a2
  const TruncatedSeries q = quotient_total_class(TruncatedSeries::total_class(Family::b, cap),
                                                 TruncatedSeries::total_class(Family::a, cap));
  CHECK(q.coeff(1) == P("b[1] - a[1]"));
  CHECK(q.coeff(2) == P("b[2] - a[1]*b[1] + a[1]^2 - a[2]"));
}

TEST_CASE("twist total class") {
  const int cap = 4;
  const TruncatedSeries c = TruncatedSeries::total_class(Family::c, cap);

  SECTION("multiplying by 1 + yt shifts into y") {
    const TruncatedSeries t =
        twist_total_class(c, TruncatedSeries::from_y_total(P("1 + y"), cap),
                          TruncatedSeries::one(cap));
    CHECK(t.coeff(1) == P("c[1] + y"));
    CHECK(t.coeff(2) == P("c[2] + c[1]*y"));
    CHECK(t.coeff(3) == P("c[3] + c[2]*y"));
  }

  SECTION("(1+2yt)/(1+yt) on the trivial class alternates") {
    const TruncatedSeries t = twist_total_class(
        TruncatedSeries::one(cap), TruncatedSeries::from_y_total(P("1 + 2*y"), cap),
        TruncatedSeries::from_y_total(P("1 + y"), cap));
    const TruncatedSeries expected(cap, {P("1"), P("y"), P("-y^2"), P("y^3"), P("-y^4")});
    CHECK(t == expected);
  }

  SECTION("equal numerator and denominator is the identity") {
    const TruncatedSeries xi = TruncatedSeries::from_y_total(P("1 + y + 3*y^2"), cap);
    CHECK(twist_total_class(c, xi, xi) == c);
  }

  SECTION("non-y twists are rejected") {
    CHECK_THROWS_AS(twist_total_class(c, TruncatedSeries::total_class(Family::a, cap),
                                      TruncatedSeries::one(cap)),
                    precondition_error);
  }
}
