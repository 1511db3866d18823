#include "doctest.h"
#include "placeone/curve.hpp"
#include "placeone/error.hpp"
#include "placeone/oracle.hpp"
#include "placeone/parse.hpp"

using namespace placeone;

namespace {
QBiPoly P(const char* s) { return parse_curve(s); }
}  // namespace

TEST_CASE("global quotient dimension") {
  CHECK(quotient_dim_global(P("y - x^2"), P("y")) == 2);
  CHECK(quotient_dim_global(P("y^3 - x^2"), P("3*y^2")) == 4);
  CHECK(quotient_dim_global(P("y^3 - x^2 - 3*y + 2"), P("y^3 - x^2 - 3*y - 2")) == 0);
  CHECK(quotient_dim_global(P("y"), P("x")) == 1);
  CHECK_THROWS_AS(quotient_dim_global(P("y^2 - x"), P("y^3 - x*y")), InputError);
}

TEST_CASE("local quotient dimension") {
  CHECK(quotient_dim_local(P("x"), P("y"), 0, 0) == 1);
  CHECK(quotient_dim_local(P("y^2 - x^3"), P("y"), 0, 0) == 3);
  CHECK(quotient_dim_local(P("x"), P("y^2"), 0, 0) == 2);
  CHECK(quotient_dim_local(P("y"), P("y - x^10"), 0, 0) == 10);
  // Away from the origin.
  CHECK(quotient_dim_local(P("(y - 1)^2 - (x - 2)^3"), P("y - 1"), 2, 1) == 3);
  // Not a common zero.
  CHECK(quotient_dim_local(P("x - 1"), P("y"), 0, 0) == 0);
  CHECK_THROWS_AS(quotient_dim_local(P("y^2"), P("y^3 + x*y"), 0, 0, 32), ResourceCapError);
}

TEST_CASE("local dimensions add up to the global one") {
  // Common zeros (0,0), (1,1), (-1,1) of y - x^2 and y^2 - y*x^2 ... chosen rational.
  const QBiPoly f = P("y - x^2"), g = P("y^2 - y");
  int sum = 0;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {-1, 1}}) sum += quotient_dim_local(f, g, a, b);
  CHECK(sum == quotient_dim_global(f, g));
  CHECK(sum == global_int(f, g));
}

#include <random>

#include "placeone/local.hpp"

namespace {
QBiPoly random_poly(std::mt19937_64& rng, int dy, int dx, bool monic) {
  std::map<std::pair<std::size_t, std::size_t>, Rational> t;
  for (int j = 0; j <= dy; ++j)
    for (int i = 0; i <= dx; ++i)
      if (rng() % 3 == 0) t[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] = Rational(static_cast<long>(rng() % 7) - 3);
  if (monic) {
    for (int i = 0; i <= dx; ++i) t.erase({static_cast<std::size_t>(i), static_cast<std::size_t>(dy)});
    t[{0, static_cast<std::size_t>(dy)}] = 1;
  }
  return bipoly_from_terms(t);
}
}  // namespace

TEST_CASE("resultant degree equals the global quotient dimension") {
  std::mt19937_64 rng(7);
  int tested = 0;
  while (tested < 25) {
    const QBiPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 5), true);
    const QBiPoly g = random_poly(rng, static_cast<int>(rng() % 5), static_cast<int>(rng() % 5), false);
    if (g.is_zero() || resultant_y(f, g).is_zero()) continue;
    CHECK(global_int(f, g) == quotient_dim_global(f, g));
    ++tested;
  }
}

TEST_CASE("local intersection numbers against the oracle and the branch sums") {
  struct Case {
    const char *f, *g;
    int a, b, expected;
  };
  const std::vector<Case> cases{
      {"x", "y", 0, 0, 1},
      {"y^2 - x^3", "y", 0, 0, 3},
      {"x", "y^2", 0, 0, 2},
      {"-2*x", "3*y^2 - 3", 0, 1, 1},  // partials of y^3 - x^2 - 3y + 2
      {"y^3 - x^2", "x", 0, 0, 3},
      {"y^3 - x^7", "y^2 - x^5", 0, 0, 14},
      {"x*y*(x + y)", "y - x^3", 0, 0, 5},
      {"y^2 + 2*x*y", "x^2 + 2*x*y", 0, 0, 4},
      {"(y - 1)^2 - x^3", "(y - 1)^2 + x^3", 0, 1, 6},
  };
  for (const auto& c : cases) {
    const QBiPoly f = P(c.f), g = P(c.g);
    const PointClass p = rational_point(c.a, c.b);
    const int fast = local_int(f, g, p);
    CHECK_MESSAGE(fast == c.expected, c.f << " , " << c.g);
    CHECK(quotient_dim_local(f, g, c.a, c.b) == fast);
    CHECK(local_int_by_branches(f, g, p) == fast);
    CHECK(local_int_by_branches(g, f, p) == fast);
  }
}
