#include "doctest.h"
#include "placeone/parse.hpp"
#include "placeone/tower.hpp"

using namespace placeone;

TEST_CASE("arithmetic in Q(sqrt 2)") {
  auto t = adjoin(Tower::rationals(), parse_univariate("z^2 - 2", "z"));
  REQUIRE(t.size() == 1);
  const Alg a = Alg::generator(t[0], 1);
  CHECK(a * a == Alg(2));
  const Alg b = a + Alg(1);
  CHECK(b * inv(b) == Alg(1));
  CHECK(min_poly_over_q(b) == parse_univariate("z^2 - 2*z - 1", "z"));
  CHECK(t[0]->known_field());
}

TEST_CASE("rational roots are split off on adjoin") {
  auto t = adjoin(Tower::rationals(), parse_univariate("(z - 1)*(z^2 + 1)*(z + 3)", "z"));
  REQUIRE(t.size() == 3);
  CHECK(t[0]->degree() == 1);
  CHECK(t[1]->degree() == 1);
  CHECK(t[2]->degree() == 2);
  Rational r;
  CHECK(as_rational(Alg::generator(t[0], 1), &r));
}

TEST_CASE("zero divisors split the tower") {
  // Level 1: a^2 = 2. Level 2: b^2 = 2 has the roots +a and -a.
  auto t1 = adjoin(Tower::rationals(), parse_univariate("z^2 - 2", "z"))[0];
  UPoly<Alg> m{Alg(-2), Alg(0), Alg(1)};
  auto t2 = t1->extend({Rep(Rational(-2)), Rep(), Rep(Rational(1))});
  CHECK(!t2->known_field());
  const Alg a = Alg::generator(t2, 1), b = Alg::generator(t2, 2);
  std::function<int(const TowerPtr&)> fn = [](const TowerPtr& t) {
    const Alg d = Alg::generator(t, 2) - Alg::generator(t, 1);
    return is_zero_d5(d) ? 1 : 0;
  };
  auto res = split_run<int>(t2, 0, fn);
  REQUIRE(res.size() == 2);
  int zeros = 0;
  for (const auto& [tt, v] : res) {
    zeros += v;
    CHECK(tt->degree() == 2);
  }
  CHECK(zeros == 1);
  (void)a;
  (void)b;
  (void)m;
}

TEST_CASE("minimal polynomial over a two-level tower") {
  auto t1 = adjoin(Tower::rationals(), parse_univariate("z^2 - 2", "z"))[0];
  auto t2 = adjoin(t1, parse_univariate("z^2 - 3", "z"))[0];
  const Alg s = Alg::generator(t2, 1) + Alg::generator(t2, 2);
  CHECK(min_poly_over_q(s) == parse_univariate("z^4 - 10*z^2 + 1", "z"));
  CHECK(t2->degree() == 4);
}

TEST_CASE("caps") {
  TowerLimits lim;
  lim.max_degree = 4;
  auto t1 = adjoin(Tower::rationals(lim), parse_univariate("z^3 - 2", "z"))[0];
  CHECK_THROWS_AS(adjoin(t1, parse_univariate("z^2 - 3", "z")), ResourceCapError);
  lim.max_depth = 1;
  auto u1 = adjoin(Tower::rationals(lim), parse_univariate("z^2 - 2", "z"))[0];
  CHECK_THROWS_AS(adjoin(u1, parse_univariate("z^2 - 3", "z")), ResourceCapError);
}

TEST_CASE("characteristic polynomial of multiplication") {
  const TowerPtr q = Tower::rationals();
  const TowerPtr t = adjoin(q, QPoly{Rational(-2), Rational(0), Rational(1)}).front();
  const Alg a = Alg::generator(t, 1);
  CHECK(char_poly_over_q(a) == (QPoly{Rational(-2), Rational(0), Rational(1)}));
  CHECK(char_poly_over_q(Alg(t, Rep(Rational(3)))) == power(QPoly{Rational(-3), Rational(1)}, 2));
  // sqrt2 + sqrt3 over a two-level tower.
  const auto t2 = adjoin(t, QPoly{Rational(-3), Rational(0), Rational(1)}).front();
  const Alg s = project(a, t2) + Alg::generator(t2, 2);
  CHECK(char_poly_over_q(s) == (QPoly{Rational(1), Rational(0), Rational(-10), Rational(0), Rational(1)}));
  // a^2 on Q(sqrt2) takes the value 2 twice.
  CHECK(char_poly_over_q(a * a) == power(QPoly{Rational(-2), Rational(1)}, 2));
  CHECK(base_polynomial(t2) == (QPoly{Rational(-2), Rational(0), Rational(1)}));
}
