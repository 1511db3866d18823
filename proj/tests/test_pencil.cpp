#include "doctest.h"
#include "placeone/error.hpp"
#include "placeone/oracle.hpp"
#include "placeone/parse.hpp"
#include "placeone/pencil.hpp"

using namespace placeone;

namespace {
QBiPoly P(const char* s) { return parse_curve(s); }
CurveNormalForm N(const char* s) { return normalize(P(s)); }
const char* kGolden = "y^3 - x^2 - 3*y + 2";
const char* kGoldenG = "y^3 - x^2 - 3*y - 2";
// Found by scanning monic cubics with unrestricted deg_x a_k.
const char* kIrregular = "y^3 - x^2*y^2 + y";

const FiberReport& fiber(const PencilAnalysis& a, const char* lambda_poly) {
  const QPoly q = parse_univariate(lambda_poly, "l");
  for (const auto& fr : a.critical)
    if (fr.lambda_poly == q) return fr;
  FAIL("no fiber " << lambda_poly);
  return a.critical.front();
}
}  // namespace

TEST_CASE("pencil resultant") {
  const PencilData cusp = build_pencil(N("y^3 - x^2"));
  CHECK(cusp.R == P("27*(x^2 + y)^2"));  // outer variable is lambda
  CHECK(cusp.i == 4);
  CHECK(cusp.P0 == QPoly(Rational(27)));
  CHECK(cusp.d_regular);
  CHECK(cusp.irregular.empty());
  CHECK(cusp.A_f == 0);

  const PencilData t = build_pencil(N("y^4 - x^2 - x"));
  CHECK(t.i == 6);
  CHECK(t.P0 == QPoly(Rational(-256)));
  CHECK(t.R == P("-256*(x^2 + x + y)^3"));
  CHECK(t.d_regular);
}

TEST_CASE("irregular pencil") {
  const CurveNormalForm c = N(kIrregular);
  REQUIRE(c.f == P(kIrregular));
  const PencilData pd = build_pencil(c);
  CHECK_FALSE(pd.d_regular);
  REQUIRE(pd.irregular.size() == 1);
  CHECK(pd.irregular[0].factor == parse_univariate("l", "l"));
  // The defect at lambda = 0 against the quotient-dimension oracle.
  const int at_zero = quotient_dim_global(c.f, d_outer(c.f));
  CHECK(pd.irregular[0].defect == pd.i - at_zero);
  CHECK(pd.A_f == 2);
  const PencilAnalysis a = analyze_pencil(c);
  CHECK(a.mu == 2);
  CHECK(a.identity.ok);
  CHECK(a.identity.rhs == pd.i);
  CHECK_FALSE(a.one_place);
}

TEST_CASE("generic identity") {
  CHECK(member_int(N("y^3 - x^2"), 1) == 4);
  CHECK(member_int(N(kGolden), 7) == 4);
  CHECK(member_int(N("y"), 5) == 0);
  for (const char* f : {"y^3 - x^2", kGolden, "y", kIrregular, "y^3 - 2*x*y^2 + 2*y - 2"}) {
    const PencilAnalysis a = analyze_pencil(N(f));
    CHECK_MESSAGE(a.identity.ok, f);
    for (std::size_t k = 0; k < a.identity.lambdas.size(); ++k)
      CHECK(a.identity.lhs[k] == quotient_dim_global(a.data.curve.f - QBiPoly(QPoly(a.identity.lambdas[k])),
                                                     d_outer(a.data.curve.f)));
  }
}

TEST_CASE("critical values") {
  auto lambdas = [](const char* f) {
    std::vector<QPoly> out;
    for (const auto& fr : analyze_pencil(N(f)).critical) out.push_back(fr.lambda_poly);
    return out;
  };
  CHECK(lambdas("y^3 - x^2") == std::vector<QPoly>{parse_univariate("l", "l")});
  CHECK(lambdas(kGolden) == std::vector<QPoly>{parse_univariate("l", "l"), parse_univariate("l - 4", "l")});
  CHECK(lambdas("y^4 - x^2 - x") == std::vector<QPoly>{parse_univariate("l - 1/4", "l")});
  // Conjugate critical values: y^3 - 6y at y = +-sqrt(2).
  CHECK(lambdas("y^3 - 6*y - x^2") == std::vector<QPoly>{parse_univariate("l^2 - 32", "l")});
}

TEST_CASE("fiber reports") {
  const PencilAnalysis a = analyze_pencil(N(kGolden));
  CHECK(a.mu == 2);
  CHECK(a.one_place);
  const FiberReport& f0 = fiber(a, "l");
  REQUIRE(f0.singular.size() == 1);
  CHECK(f0.singular[0].point.x == Alg(0));
  CHECK(f0.singular[0].point.y == Alg(1));
  CHECK(f0.singular[0].mu == 1);
  CHECK(f0.singular[0].r == 2);
  CHECK(f0.singular[0].delta == 1);
  CHECK(f0.mu_fiber == 1);
  CHECK(f0.genus == 0);
  CHECK(f0.genus_formula == 0);
  CHECK(f0.rational);
  CHECK(fiber(a, "l - 4").mu_fiber == 1);
  const FiberReport g = fiber_at(a, 1);
  CHECK(g.singular.empty());
  CHECK(g.genus == 1);
  CHECK(a.generic.genus == 1);
  CHECK(a.violations.empty());

  const PencilAnalysis cusp = analyze_pencil(N("y^3 - x^2"));
  const FiberReport& c0 = fiber(cusp, "l");
  REQUIRE(c0.singular.size() == 1);
  CHECK(c0.singular[0].mu == 2);
  CHECK(c0.singular[0].r == 1);
  CHECK(c0.genus == 0);
  CHECK(c0.r_inf == 1);
  CHECK(c0.mu_inf == 0);

  // A conjugate pair of members, one node on each.
  const PencilAnalysis conj = analyze_pencil(N("y^3 - 6*y - x^2"));
  const FiberReport& fc = fiber(conj, "l^2 - 32");
  CHECK(fc.members() == 2);
  CHECK(fc.singular_count == 1);
  CHECK(fc.mu_fiber == 1);
  CHECK(fc.genus == 0);
}

TEST_CASE("sum of fiber Milnor numbers") {
  for (const char* f : {kGolden, "y^3 - x^2", "y^3 - 3*y + x^3 - 3*x", "y^4 - x^2 - x", "y^3 - 6*y - x^2",
                        "y^2 + x^3 - 6*x", "y^4 + x^3 + y*x"}) {
    const PencilAnalysis a = analyze_pencil(N(f));
    long total = 0;
    for (const auto& fr : a.critical) total += fr.mu_fiber * fr.members();
    CHECK_MESSAGE(total == a.mu, f);
    const CurveNormalForm& c = a.data.curve;
    const QBiPoly fy = d_outer(c.f).scale(QPoly(Rational(1, c.n)));
    CHECK(a.mu == quotient_dim_global(fy, d_inner(c.f)));
  }
}

TEST_CASE("census") {
  const CensusVerdict golden = rational_census(analyze_pencil(N(kGolden)));
  CHECK(golden.kind == CensusCase::two_rational);
  CHECK(golden.rational_lambdas == std::vector<Rational>{Rational(0), Rational(4)});
  CHECK(golden.size_bound_ok);
  REQUIRE(golden.pair_structure);
  CHECK(golden.pair_structure->ok);
  CHECK_FALSE(golden.uniqueness_reason);

  const CensusVerdict cusp = rational_census(analyze_pencil(N("y^3 - x^2")));
  CHECK(cusp.kind == CensusCase::unique_rational);
  CHECK(cusp.rational_lambdas == std::vector<Rational>{Rational(0)});
  REQUIRE(cusp.uniqueness_reason);
  CHECK(*cusp.uniqueness_reason == "r_p = 1 at a singular point");
  CHECK(cusp.uniqueness_ok);

  for (const char* f : {"y", "y - x^2"}) {
    const CensusVerdict v = rational_census(analyze_pencil(N(f)));
    CHECK(v.kind == CensusCase::coordinate_case);
    CHECK(v.all_rational);
    CHECK(v.divisibility_ok == true);
  }

  const CensusVerdict conj = rational_census(analyze_pencil(N("y^3 - 6*y - x^2")));
  CHECK(conj.kind == CensusCase::two_rational);
  CHECK(conj.rational_count == 2);
  CHECK(conj.rational_lambdas.empty());
  REQUIRE(conj.pair_structure);
  CHECK(conj.pair_structure->ok);

  const CensusVerdict na = rational_census(analyze_pencil(N("y^4 - x^2 - x")));
  CHECK(na.kind == CensusCase::not_applicable);
}

TEST_CASE("census under translation of lambda") {
  for (const char* f : {kGolden, "y^3 - x^2", "y^3 - 6*y - x^2"}) {
    const CensusVerdict v = rational_census(analyze_pencil(N(f)));
    for (int c : {-3, 2, 5}) {
      const QBiPoly shifted = P(f) - QBiPoly(QPoly(Rational(c)));
      const CensusVerdict w = rational_census(analyze_pencil(normalize(shifted)));
      CHECK(w.kind == v.kind);
      REQUIRE(w.rational_lambdas.size() == v.rational_lambdas.size());
      for (std::size_t k = 0; k < v.rational_lambdas.size(); ++k)
        CHECK(w.rational_lambdas[k] == v.rational_lambdas[k] - c);
      REQUIRE(w.rational_classes.size() == v.rational_classes.size());
      for (std::size_t k = 0; k < v.rational_classes.size(); ++k)
        CHECK(w.rational_classes[k] == taylor_shift(v.rational_classes[k], Rational(c)));
    }
  }
}

TEST_CASE("pairs") {
  const PairReport golden = classify_pair(P(kGolden), P(kGoldenG));
  CHECK(golden.kind == PairCase::case_ii);
  CHECK(golden.intersection == 0);
  CHECK(golden.lambda1 == Rational(4));
  CHECK(golden.mu == 2);
  REQUIRE(golden.structure);
  CHECK(golden.structure->ok);
  CHECK(golden.violations.empty());

  const PairReport coord = classify_pair(P("y"), P("y + 1"));
  CHECK(coord.kind == PairCase::case_i);
  CHECK(coord.lambda1 == Rational(-1));

  const PairReport meet = classify_pair(P("y - x^2"), P("y"));
  CHECK(meet.kind == PairCase::case_iii);
  CHECK(meet.intersection == 2);

  CHECK_THROWS_AS(classify_pair(P("2*y"), P("y")), InputError);
  CHECK_THROWS_AS(classify_pair(P("y"), P("y")), InputError);
  CHECK_THROWS_AS(classify_pair(P("y^4 - x^2 - x"), P("y")), InputError);
  // One place at infinity but genus 1.
  CHECK_THROWS_AS(classify_pair(P("y^3 - x^2 - 3*y"), P("y")), InputError);
}
