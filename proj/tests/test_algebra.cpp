#include <random>

#include "doctest.h"
#include "placeone/parse.hpp"
#include "placeone/qpoly.hpp"

using namespace placeone;

namespace {

// Sylvester determinant by Gaussian elimination: an oracle that shares no code
// with the subresultant sequence.
Rational sylvester_det(const QPoly& a, const QPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int N = m + n;
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = a[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = b[n - i];
  Rational det = 1;
  for (int c = 0; c < N; ++c) {
    int p = c;
    while (p < N && sgn(M[p][c]) == 0) ++p;
    if (p == N) return 0;
    if (p != c) {
      std::swap(M[p], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < N; ++r) {
      const Rational f = M[r][c] / M[c][c];
      for (int k = c; k < N; ++k) M[r][k] -= f * M[c][k];
    }
  }
  return det;
}

QPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rational> c(deg + 1);
  for (auto& x : c) x = d(rng);
  if (sgn(c.back()) == 0) c.back() = 1;
  return QPoly(c);
}

}  // namespace

TEST_CASE("parser accepts the documented grammar") {
  const QBiPoly f = parse_curve("y^3 - x^2 - 3*y + 2");
  CHECK(coeff(f, 0, 3) == 1);
  CHECK(coeff(f, 2, 0) == -1);
  CHECK(coeff(f, 0, 1) == -3);
  CHECK(coeff(f, 0, 0) == 2);
  CHECK(to_string(f, "x", "y") == "y^3 - x^2 - 3*y + 2");
  CHECK(parse_curve("(x+1)/2") == parse_curve("x/2 + 1/2"));
  CHECK(parse_curve("-(x-y)^2") == parse_curve("-x^2 + 2*x*y - y^2"));
}

TEST_CASE("parser reports positions") {
  CHECK_THROWS_AS(parse_curve("x + z"), ParseError);
  CHECK_THROWS_AS(parse_curve("x / y"), ParseError);
  CHECK_THROWS_AS(parse_curve("x +"), ParseError);
  CHECK_THROWS_AS(parse_curve("(x"), ParseError);
  try {
    parse_curve("x + z");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const QPoly a = random_poly(rng, 1 + trial % 5);
    const QPoly b = random_poly(rng, 1 + (trial / 5) % 4);
    CHECK(resultant(a, b) == sylvester_det(a, b));
  }
}

TEST_CASE("bivariate resultant matches pointwise resultants") {
  const QBiPoly f = parse_curve("y^3 - x^2 - 3*y + 2");
  const QBiPoly g = parse_curve("y^2 + x*y - 1");
  const QPoly r = resultant_y(f, g);
  for (int x = -3; x <= 3; ++x) {
    const Rational a(x);
    CHECK(r(a) == sylvester_det(eval_inner(f, a), eval_inner(g, a)));
  }
}

TEST_CASE("rational roots") {
  const QPoly p = QPoly{-1, 1} * QPoly{3, 2} * QPoly{1, 0, 1} * QPoly{-5, 7};
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rational(-3, 2));
  CHECK(roots[1] == Rational(5, 7));
  CHECK(roots[2] == 1);
  CHECK(rational_roots(QPoly{-2, 0, 1}).empty());
  CHECK(rational_roots(QPoly{0, 0, 1}) == std::vector<Rational>{0});
  const auto pieces = split_rational_roots(squarefree_part(p));
  REQUIRE(pieces.size() == 4);
  CHECK(pieces.back() == QPoly{1, 0, 1});
}

TEST_CASE("squarefree decomposition reassembles the input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const QPoly a = random_poly(rng, 2), b = random_poly(rng, 1), c = random_poly(rng, 2);
    const QPoly p = a * b * b * c * c * c;
    QPoly prod{1};
    for (const auto& [s, k] : squarefree_decompose(p)) {
      CHECK(gcd(s, s.derivative()).degree() == 0);
      for (int i = 0; i < k; ++i) prod *= s;
    }
    CHECK(prod == make_monic(p));
  }
}

TEST_CASE("interpolation and shears") {
  const QBiPoly f = parse_curve("x^3*y - 2*x*y^2 + 5");
  std::vector<Rational> nodes;
  std::vector<QPoly> vals;
  for (int k = 0; k < 4; ++k) {
    nodes.emplace_back(k);
    vals.push_back(eval_inner(f, Rational(k)));
  }
  // Sampling in x recovers f with the roles exchanged.
  CHECK(swap_variables(interpolate_outer(nodes, vals)) == f);
  CHECK(shear_inner(shear_inner(f, Rational(2)), Rational(-2)) == f);
  CHECK(shear_outer(f, Rational(3)) == parse_curve("x^3*(y+3*x) - 2*x*(y+3*x)^2 + 5"));
  CHECK(translate(f, Rational(1), Rational(-1)) == parse_curve("(x+1)^3*(y-1) - 2*(x+1)*(y-1)^2 + 5"));
}

TEST_CASE("bivariate gcd") {
  const QBiPoly a = parse_curve("y^2 - x");
  const QBiPoly b = parse_curve("y + x^2 + 1");
  const QBiPoly c = parse_curve("x*y - 3");
  const QBiPoly g = gcd(a * c, b * c);
  CHECK(g == c.scale(QPoly(Rational(1, 1))));
  CHECK(exact_div(a * c, g) == a);
  CHECK(gcd(a, b).degree() == 0);
}
