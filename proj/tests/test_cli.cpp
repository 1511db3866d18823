#include "doctest.h"
#include "placeone/commands.hpp"
#include "placeone/parse.hpp"

using namespace placeone;

namespace {

const char* kGolden = "y^3 - x^2 - 3*y + 2";

// The payload decodes to a record that encodes back to the same JSON.
template <class R>
R round_trip(const CommandResult& res) {
  const Json& j = res.envelope.at("result");
  const R r = j.get<R>();
  CHECK(Json(r) == j);
  const R again = Json(r).get<R>();
  CHECK(again == r);
  return r;
}

}  // namespace

TEST_CASE("envelope fields") {
  const CommandResult res = cmd_analyze(kGolden);
  CHECK(res.exit_code == exit_ok);
  const Json& e = res.envelope;
  CHECK(e.at("tool") == "placeone");
  CHECK(e.at("version") == kToolVersion);
  CHECK(e.at("command") == "analyze");
  CHECK(e.at("input").at("f") == kGolden);
  CHECK(e.at("seed") == 0);
  CHECK(e.at("timing").is_null());
  CommandOptions timed;
  timed.timing = true;
  CHECK(cmd_analyze(kGolden, timed).envelope.at("timing").is_object());
}

TEST_CASE("payloads round-trip") {
  const AnalyzeRecord a = round_trip<AnalyzeRecord>(cmd_analyze(kGolden));
  CHECK(a.mu == 2);
  CHECK(a.one_place);
  round_trip<AnalyzeRecord>(cmd_analyze("y^4 - x^2 - x"));
  round_trip<PencilReportRecord>(cmd_pencil("y^3 - x^2"));
  const CensusRecord c = round_trip<CensusRecord>(cmd_census(kGolden));
  CHECK(c.kind == "two_rational");
  const ImplicitizeRecord i = round_trip<ImplicitizeRecord>(cmd_implicitize("t^3 - 3*t", "t^2 - 2"));
  CHECK(i.normal_form.f == parse_curve("y^3 - x^2 - 3*y + 2"));
  const PairRecord p = round_trip<PairRecord>(cmd_pair(kGolden, "y^3 - x^2 - 3*y - 2"));
  CHECK(p.kind == "case_ii");
  REQUIRE(p.lambda1);
  CHECK(*p.lambda1 == 4);
  const LemmaRecord l = round_trip<LemmaRecord>(cmd_lemma("x*y*(x + y)"));
  CHECK(l.mu == 4);
  CHECK(l.r == 3);
  CHECK(l.bound_ok);
  round_trip<VerifyRecord>(cmd_verify("y - x^2", "y - 1"));
}

TEST_CASE("polynomials carry text and coefficients") {
  const Json j = bipoly_json(parse_curve("y^2 - 3/2*x"), "x", "y");
  CHECK(j.at("text") == "y^2 - 3/2*x");
  CHECK(bipoly_from_json(j) == parse_curve("y^2 - 3/2*x"));
  const Json q = poly_json(QPoly({Rational(-2), Rational(0), Rational(1)}), "t");
  CHECK(q.at("coeffs") == Json::array({"-2", "0", "1"}));
  CHECK(poly_from_json(q) == QPoly({Rational(-2), Rational(0), Rational(1)}));
}

TEST_CASE("exit codes") {
  CHECK(cmd_analyze("y^").exit_code == exit_input);
  CHECK(cmd_analyze("y^2").exit_code == exit_input);
  CHECK(cmd_analyze("3").exit_code == exit_input);
  const CommandResult bad = cmd_analyze("y^");
  CHECK(bad.envelope.at("result").at("error").at("kind") == "input");
  // More than one place at infinity: the census does not apply.
  CHECK(cmd_census("y^4 - x^2 - x").exit_code == exit_input);
  CommandOptions capped;
  capped.engine.limits.max_degree = 1;
  const CommandResult cap = cmd_analyze("y^3 - x^4 - 2*x - y", capped);
  CHECK(cap.exit_code == exit_cap);
  CHECK(cap.envelope.at("result").at("error").at("kind") == "resource_cap");
  CHECK(cmd_pair(kGolden, "y^3 - x^2 - 3*y - 2").exit_code == exit_ok);
  CHECK(cmd_verify("y^2 - x", "x*y").exit_code == exit_ok);
  CHECK(cmd_verify("y*(y - x)", "y").exit_code == exit_input);
}

TEST_CASE("verify") {
  const VerifyRecord v = round_trip<VerifyRecord>(cmd_verify("y^2 - x^3", "y"));
  REQUIRE(v.global);
  CHECK(*v.global == 3);
  CHECK(*v.global_oracle == 3);
  REQUIRE(v.points.size() == 1);
  CHECK(v.points[0].local == 3);
  CHECK(v.points[0].oracle == 3);
  CHECK(v.points[0].branches == 3);
  CHECK(v.all_points_rational);
  CHECK(v.violations.empty());

  // Two of the four common zeros of y - x^2 and y - 2 are irrational.
  const VerifyRecord w = round_trip<VerifyRecord>(cmd_verify("(y - x^2)*(y - x)", "y - 2"));
  CHECK(*w.global == 3);
  CHECK(w.points.size() == 1);
  CHECK_FALSE(w.all_points_rational);

  const VerifyRecord at = round_trip<VerifyRecord>(cmd_verify("x*y*(x + y)", "x - y^2", std::pair{"0", "0"}));
  REQUIRE(at.points.size() == 1);
  CHECK(at.points[0].local == 4);
  CHECK(at.violations.empty());
}

TEST_CASE("corpus is deterministic and independent of jobs") {
  CorpusSpec spec;
  spec.count = 6;
  spec.a_max = 5;
  spec.seed = 7;
  auto run = [&](int jobs) {
    CommandOptions opt;
    opt.jobs = jobs;
    std::string out;
    const CorpusResult r = cmd_corpus(spec, opt, [&](const Json& e) { out += e.dump() + "\n"; });
    CHECK(r.exit_code == exit_ok);
    CHECK(r.members.size() == 6);
    return out;
  };
  const std::string one = run(1);
  CHECK(one == run(1));
  CHECK(one == run(3));

  for (long k = 0; k < 20; ++k) {
    const CorpusCandidate c = corpus_candidate(spec, k);
    CHECK(c.a >= spec.a_min);
    CHECK(c.a <= spec.a_max);
    CHECK(std::gcd(c.a, c.b) == 1);
    CHECK(c.x_of_t.degree() == c.a);
    CHECK(c.y_of_t.degree() == c.b);
    for (const auto& q : c.x_of_t.coeffs()) CHECK(abs(q) <= spec.coeff_bound);
  }

  CorpusSpec bad = spec;
  bad.a_min = 1;
  CHECK_THROWS_AS(corpus_candidate(bad, 0), InputError);
}

TEST_CASE("corpus members round-trip") {
  CorpusSpec spec;
  spec.count = 3;
  std::vector<Json> lines;
  const CorpusResult r = cmd_corpus(spec, {}, [&](const Json& e) { lines.push_back(e); });
  REQUIRE(lines.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(lines[i].at("command") == "corpus");
    const auto m = lines[i].at("result").get<CorpusMemberRecord>();
    CHECK(m == r.members[i]);
    CHECK(m.index == static_cast<long>(i));
  }
  CHECK(lines[3].at("command") == "corpus-summary");
  CHECK(lines[3].at("result").get<CorpusSummaryRecord>() == r.summary);
  CHECK(r.summary.members == 3);
}

TEST_CASE("text view") {
  const Json j = Json{{"a", 1}, {"f", bipoly_json(parse_curve("y - x"), "x", "y")}, {"list", Json::array({2, 3})},
                      {"none", nullptr}};
  const std::string t = render_text(j);
  CHECK(t.find("a: 1\n") != std::string::npos);
  CHECK(t.find("f: y - x\n") != std::string::npos);
  CHECK(t.find("coeffs") == std::string::npos);
  CHECK(t.find("none: -\n") != std::string::npos);
  const std::string golden = render_text(cmd_analyze(kGolden).envelope);
  CHECK(golden.find("command: analyze") != std::string::npos);
}
