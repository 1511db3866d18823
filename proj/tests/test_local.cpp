#include <random>

#include "doctest.h"
#include "placeone/local.hpp"
#include "placeone/parse.hpp"

using namespace placeone;

namespace {
QBiPoly P(const char* s) { return parse_curve(s); }

int mu_at(const char* f, int a, int b) { return milnor_local(P(f), rational_point(a, b)); }
int r_at(const char* f, int a, int b) { return branch_count(lift(P(f)), rational_point(a, b)); }
}  // namespace

TEST_CASE("critical points") {
  auto a = critical_points(normalize(P("y^3 - x^2")));
  REQUIRE(a.size() == 1);
  CHECK(a[0].orbit_degree() == 1);
  CHECK(a[0].x == Alg(0));
  CHECK(a[0].y == Alg(0));
  auto b = critical_points(normalize(P("y^3 - x^2 - 3*y + 2")));
  long total = 0;
  for (const auto& p : b) total += p.orbit_degree();
  CHECK(total == 2);
  auto c = critical_points(normalize(P("y^4 - x^2 - x")));
  REQUIRE(c.size() == 1);
  CHECK(c[0].x == Alg(Rational(-1, 2)));
  CHECK(c[0].y == Alg(0));
  CHECK_THROWS_AS(critical_points(normalize(P("y^2 + y"))), InputError);
}

TEST_CASE("local intersection numbers") {
  const PointClass o = origin_point();
  CHECK(local_int(P("x"), P("y"), o) == 1);
  CHECK(local_int(P("y^2 - x^3"), P("y"), o) == 3);
  CHECK(local_int(P("y"), P("y^2 - x^3"), o) == 3);
  const QBiPoly f = P("y^3 - x^2 - 3*y + 2");
  CHECK(local_int(d_inner(f), d_outer(f), rational_point(0, 1)) == 1);
  CHECK_THROWS_AS(local_int(P("y*(y - x)"), P("y*(x + 1)"), o), InputError);
  // Common component away from the point is ignored.
  CHECK(local_int(P("x*(y - 1)"), P("y*(y - 1)"), o) == 1);
}

TEST_CASE("intersection by branches agrees") {
  const PointClass o = origin_point();
  CHECK(local_int_by_branches(P("y^2 - x^3"), P("y"), o) == 3);
  CHECK(local_int_by_branches(P("y"), P("y^2 - x^3"), o) == 3);
  CHECK(local_int_by_branches(P("x*y*(x + y)"), P("y - x^3"), o) == 5);
  CHECK(local_int(P("x*y*(x + y)"), P("y - x^3"), o) == 5);
  CHECK(local_int_by_branches(P("y^3 - x^7"), P("y^2 - x^5"), o) == local_int(P("y^3 - x^7"), P("y^2 - x^5"), o));
}

TEST_CASE("Milnor numbers and branches") {
  CHECK(mu_at("y^3 - x^2", 0, 0) == 2);
  CHECK(mu_at("x*y", 0, 0) == 1);
  CHECK(mu_at("y^3 - x^2 - 3*y + 2", 0, 1) == 1);
  CHECK(mu_at("y - x^2", 0, 0) == 0);
  CHECK(r_at("y^3 - x^2", 0, 0) == 1);
  CHECK(r_at("x*y", 0, 0) == 2);
  CHECK(r_at("y^3 - x^2 - 3*y + 2", 0, 1) == 2);
  CHECK(r_at("x*y*(x + y)", 0, 0) == 3);
  CHECK(r_at("(y^2 - x^3)*(y^2 - 2*x^3)", 0, 0) == 2);
  CHECK(r_at("y^2 - x^4", 0, 0) == 2);
  CHECK(r_at("y^2 + x^4", 0, 0) == 2);
  CHECK(r_at("y^4 - 2*x^2*y^2 + x^4 - x^5", 0, 0) == 2);
  CHECK(r_at("x^2 + y^2", 0, 0) == 2);
}

TEST_CASE("branches over an extension") {
  // y^3 + 3y^2 - x^2: two places with tangents y = +-x/sqrt(3).
  const auto bs = puiseux_branches(Tower::rationals(), lift(P("y^3 + 3*y^2 - x^2")), 16);
  long weight = 0;
  for (const auto& b : bs) weight += b.host->degree();
  CHECK(weight == 2);
}

TEST_CASE("invariants at infinity") {
  CHECK(r_infinity(normalize(P("y^3 - x^2"))) == 1);
  CHECK(r_infinity(normalize(P("y^3 - x^2 - 3*y + 2"))) == 1);
  CHECK(r_infinity(normalize(P("y^4 - x^2 - x"))) == 2);
  CHECK(mu_infinity(normalize(P("y^3 - x^2"))) == 0);
  CHECK(mu_infinity(normalize(P("y^3 - x^2 - 3*y + 2"))) == 0);
  CHECK(mu_infinity(normalize(P("y^4 - x^2 - x"))) == 3);
  const auto c = normalize(P("y^4 - x^2 - x"));
  const TowerPtr t = Tower::rationals();
  CHECK(mu_infinity(c, t, Alg(t, Rep(Rational(5)))) == 3);
  CHECK(r_infinity(c, t, Alg(t, Rep(Rational(5)))) == 2);
}

TEST_CASE("delta") {
  CHECK(delta_from(1, 2) == 1);
  CHECK(delta_from(2, 1) == 1);
  CHECK(delta_from(3, 2) == 2);
  CHECK(mu_at("y^4 - (x + 1/2)^2", -1, 0) == 0);
  CHECK_THROWS_AS(delta_from(2, 2), InternalError);
}

TEST_CASE("tacnode") {
  const QBiPoly f = P("y^4 - (x + 1/2)^2");
  // Singular point where y = 0 and x = -1/2.
  CHECK(milnor_local(f, rational_point(Rational(-1, 2), 0)) == 3);
  CHECK(branch_count(lift(f), rational_point(Rational(-1, 2), 0)) == 2);
}

TEST_CASE("local bounds record") {
  auto a = local_bounds_check(P("x*y"));
  CHECK(a.mu0 == 1);
  CHECK(a.r == 2);
  CHECK(a.bound_ok);
  CHECK(a.coords_applies);
  CHECK(a.coords_ok);
  auto b = local_bounds_check(P("x*y*(x + y)"));
  CHECK(b.mu0 == 4);
  CHECK(b.r == 3);
  CHECK(b.bound_ok);
  CHECK(b.strict_applies);
  CHECK(b.strict_ok);
  auto c = local_bounds_check(P("y^3 - x^2"));
  CHECK(c.mu0 == 2);
  CHECK(c.r == 1);
  CHECK(!c.strict_applies);
  CHECK(!c.coords_applies);
  CHECK_THROWS_AS(local_bounds_check(P("y^2 + 1")), InputError);
  CHECK_THROWS_AS(local_bounds_check(P("y^2*(x + 1)")), InputError);
}

namespace {

// h(l1, l2) for linear forms l1, l2 in x, y.
QBiPoly substitute(const QBiPoly& h, const QBiPoly& l1, const QBiPoly& l2) {
  QBiPoly acc;
  QBiPoly p2 = P("1");
  for (std::size_t j = 0; j < h.size(); ++j) {
    QBiPoly p1 = P("1");
    for (std::size_t i = 0; i < h[j].size(); ++i) {
      if (!is_zero(h[j][i])) acc = acc + (p1 * p2).scale(QPoly(h[j][i]));
      p1 = p1 * l1;
    }
    p2 = p2 * l2;
  }
  return acc;
}

}  // namespace

TEST_CASE("mu and r under linear changes fixing the point") {
  std::mt19937_64 rng(5);
  auto small = [&] { return static_cast<long>(rng() % 7) - 3; };
  const std::vector<std::pair<const char*, std::pair<int, int>>> cases = {
      {"y^2 - x^3", {0, 0}},
      {"(y - 1)^2 - (x - 2)^5", {2, 1}},
      {"x*y*(x + y)", {0, 0}},
      {"((y - 2*x)^2 - x^3)*(y + x)", {0, 0}},
      {"(x + 1)^2*y - y^3 + (x + 1)^4", {-1, 0}},
      {"y^3 - x^2 - 3*y + 2", {0, 1}},
  };
  for (const auto& [text, pt] : cases) {
    const QBiPoly f = P(text);
    const auto [a, b] = pt;
    const int mu = milnor_local(f, rational_point(a, b));
    const int r = branch_count(lift(f), rational_point(a, b));
    const QBiPoly at0 = translate(f, Rational(a), Rational(b));
    for (int trial = 0; trial < 3; ++trial) {
      long m[4];
      do
        for (long& e : m) e = small();
      while (m[0] * m[3] - m[1] * m[2] == 0);
      const QBiPoly l1 = P("x").scale(QPoly(Rational(m[0]))) + P("y").scale(QPoly(Rational(m[1])));
      const QBiPoly l2 = P("x").scale(QPoly(Rational(m[2]))) + P("y").scale(QPoly(Rational(m[3])));
      const QBiPoly g = translate(substitute(at0, l1, l2), Rational(-a), Rational(-b));
      CAPTURE(text);
      CHECK(milnor_local(g, rational_point(a, b)) == mu);
      CHECK(branch_count(lift(g), rational_point(a, b)) == r);
    }
  }
}

TEST_CASE("local route agrees with the global certification") {
  const char* pairs[][2] = {{"y^2 - x^3", "y - x^2"}, {"x*y*(x + y)", "x - y^2"}, {"y^3 - x^2 - 3*y + 2", "y - 1"}};
  for (const auto& [fs, gs] : pairs) {
    const QBiPoly f = P(fs), g = P(gs);
    const IntersectionMultiplicities im(f, g);
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}, {-1, 1}}) {
      CAPTURE(fs);
      CHECK(local_int(f, g, rational_point(a, b)) == im.at(rational_point(a, b)));
    }
  }
}
