#include <random>

#include "doctest.h"
#include "placeone/curve.hpp"
#include "placeone/parse.hpp"

using namespace placeone;

namespace {
QBiPoly P(const char* s) { return parse_curve(s); }
QPoly T(const char* s) { return parse_univariate(s, "t"); }
}  // namespace

TEST_CASE("resultant examples") {
  CHECK(resultant_y(P("y - x"), P("y + x")) == parse_univariate("2*x", "x"));
  CHECK(resultant_y(P("y^3 - x^2"), P("3*y^2")) == parse_univariate("27*x^4", "x"));
  const QBiPoly f = P("y^3 - x^2 - 3*y + 2");
  CHECK(resultant_y(f, f - P("4")) == QPoly{Rational(-64)});
  CHECK_THROWS_WITH(resultant_y(QBiPoly{}, QBiPoly{}), "undefined resultant");
}

TEST_CASE("resultant is multiplicative") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  auto rnd = [&](int dy) {
    std::map<std::pair<std::size_t, std::size_t>, Rational> terms;
    for (int j = 0; j <= dy; ++j)
      for (int i = 0; i <= 2; ++i) terms[{i, j}] = d(rng);
    terms[{0, static_cast<std::size_t>(dy)}] = 1;
    return bipoly_from_terms(terms);
  };
  for (int k = 0; k < 10; ++k) {
    const QBiPoly f = rnd(2), g = rnd(1), h = rnd(2);
    CHECK(resultant_y(f, g * h) == resultant_y(f, g) * resultant_y(f, h));
  }
}

TEST_CASE("global_int") {
  CHECK(global_int(P("y"), P("x")) == 1);
  CHECK(global_int(P("y^3 - x^2"), P("3*y^2")) == 4);
  CHECK(global_int(P("y^3 - x^2 - 3*y + 2"), P("y^3 - x^2 - 3*y - 2")) == 0);
  CHECK_THROWS_WITH(global_int(P("y^2 - x"), P("(y^2 - x)*(y+1)")), "infinite intersection: common component");
}

TEST_CASE("implicitize") {
  CHECK(implicitize(T("t^3 - 3*t"), T("t^2 - 2")).f == P("y^3 - x^2 - 3*y + 2"));
  CHECK(implicitize(T("t^3 + 3*t"), T("t^2 + 2")).f == P("y^3 - x^2 - 3*y - 2"));
  CHECK(implicitize(T("t"), T("t^2")).f == P("y - x^2"));
  CHECK(implicitize(T("t^2"), T("t^3")).f == P("y^2 - x^3"));
  CHECK_THROWS_AS(implicitize(T("t^2"), T("t^4 + t^2")), InputError);
  // Substitution check on a random proper parametrization.
  const QPoly X = T("t^5 - 2*t^3 + t"), Y = T("t^3 + 3*t^2 - 1");
  const QBiPoly f = implicitize(X, Y).f;
  QPoly acc;
  for (std::size_t j = f.size(); j-- > 0;) acc = acc * Y + compose(f[j], X);
  CHECK(acc.is_zero());
}

TEST_CASE("normalize") {
  auto a = normalize(P("y^3 - x^2 - 3*y + 2"));
  CHECK(a.f == P("y^3 - x^2 - 3*y + 2"));
  CHECK(a.degree_condition_holds);
  CHECK(a.applied.describe() == "identity");
  auto b = normalize(P("x^2 - y^3"));
  CHECK(b.f == P("y^3 - x^2"));
  CHECK(b.degree_condition_holds);
  auto c = normalize(P("y^2 - x^3"));
  CHECK(c.f == P("y^3 - x^2"));
  CHECK(c.applied.swapped);
  CHECK(c.degree_condition_holds);
  // Leading form (y + 2x)^3 gets sheared to y^3.
  auto d = normalize(P("(y + 2*x)^3 - x"));
  CHECK(d.degree_condition_holds);
  CHECK(d.f == d.applied.apply(P("(y + 2*x)^3 - x")));
  // Several points at infinity: only monic.
  auto e = normalize(P("x*y + 1"));
  CHECK(leading_coefficient_constant(e.f));
  CHECK(!e.degree_condition_holds);
  CHECK_THROWS_WITH(normalize(P("(y - x^2)^2")), "non-reduced input");
  CHECK_THROWS_AS(normalize(P("3")), InputError);
}

TEST_CASE("localize at infinity") {
  CHECK(localize_at_infinity(normalize(P("y^3 - x^2"))) == P("y^3 - x"));
  // Inner variable is u, printed here as x.
  CHECK(localize_at_infinity(normalize(P("y^3 - x^2 - 3*y + 2"))) == P("y^3 - x - 3*y*x^2 + 2*x^3"));
  CHECK(localize_at_infinity(normalize(P("y^4 - x^2 - x"))) == P("y^4 - x^2 - x^3"));
  const auto c = normalize(P("x*y + 1"));
  CHECK_THROWS_AS(localize_at_infinity(c), InputError);
}

TEST_CASE("F(y, 0) = y^n under the degree condition") {
  for (const char* s : {"y^3 - x^2", "y^5 - x^3 + x*y^2", "y^4 + x*y^2 - x^3 + 2"}) {
    const auto c = normalize(P(s));
    REQUIRE(c.degree_condition_holds);
    CHECK(eval_inner(localize_at_infinity(c), Rational(0)) == QPoly::monomial(Rational(1), static_cast<std::size_t>(c.n)));
  }
}

TEST_CASE("squarefree decomposition examples") {
  const auto a = squarefree_decompose(parse_univariate("x^2*(x-1)", "x"));
  REQUIRE(a.size() == 2);
  CHECK(a[0].first == parse_univariate("x - 1", "x"));
  CHECK(a[0].second == 1);
  CHECK(a[1].first == parse_univariate("x", "x"));
  CHECK(a[1].second == 2);
  const auto b = squarefree_decompose(parse_univariate("x^2 + 2*x + 1", "x"));
  REQUIRE(b.size() == 1);
  CHECK(b[0].second == 2);
  const auto c = squarefree_decompose(parse_univariate("l^2 - 4*l", "l"));
  REQUIRE(c.size() == 1);
  CHECK(rational_roots(c[0].first) == std::vector<Rational>{0, 4});
}
