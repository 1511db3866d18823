#pragma once

// Plain report records for the command-line front end. Each record is built
// from analysis results, serializes to JSON and parses back to an equal record.
// Polynomials appear as {"text", "coeffs"} with ascending coefficient arrays;
// rationals as strings "p" or "p/q". Parsing reads the coefficient arrays.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "placeone/pencil.hpp"

namespace placeone {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json poly_json(const QPoly& p, const std::string& var);
QPoly poly_from_json(const Json& j);
/// Rows are coefficients of the outer variable, each a list in the inner one.
Json bipoly_json(const QBiPoly& p, const std::string& inner, const std::string& outer);
QBiPoly bipoly_from_json(const Json& j);

struct PointRecord {
  std::vector<std::string> tower;  // minimal polynomials, innermost first
  std::string x, y;
  long orbit_degree = 1;
  int mu = 0, r = 1, delta = 0;
  long per_member = 1;
  bool operator==(const PointRecord&) const = default;
};

struct FiberRecord {
  QPoly lambda_poly;
  std::optional<Rational> lambda;
  long members = 1;
  std::vector<PointRecord> singular;
  int mu_fiber = 0, mu_bar = 0, int_fy = 0, A_member = 0;
  std::optional<int> r_inf, mu_inf;
  int singular_count = 0, sum_r_minus_1 = 0, sum_2delta = 0;
  std::optional<int> genus, genus_formula;
  bool star_ok = true, bezout_ok = true, bezout_with_A = true, rational = false;
  bool operator==(const FiberRecord&) const = default;
};

struct NormalFormRecord {
  QBiPoly f;
  int n = 0;
  bool degree_condition = false;
  bool codegree_condition = false;
  std::string transform;
  bool operator==(const NormalFormRecord&) const = default;
};

struct IrregularRecord {
  QPoly factor;
  int defect = 0;
  bool operator==(const IrregularRecord&) const = default;
};

struct IdentityRecord {
  std::vector<Rational> lambdas;
  std::vector<int> lhs;
  int rhs = 0;
  bool ok = false;
  bool operator==(const IdentityRecord&) const = default;
};

struct PencilRecord {
  QBiPoly R;  // inner x, outer lambda
  int i = 0;
  QPoly P0;
  bool d_regular = false;
  std::vector<IrregularRecord> irregular;
  int A_f = 0;
  bool all_fibers_reduced = true;
  bool operator==(const PencilRecord&) const = default;
};

struct AnalyzeRecord {
  NormalFormRecord normal_form;
  int mu = 0;
  bool one_place = false;
  std::optional<int> r_inf, mu_inf;
  int A_member = 0;
  std::vector<PointRecord> critical_points;  // singular points of f itself
  FiberRecord curve;  // the member lambda = 0
  std::vector<FiberRecord> critical_fibers;
  FiberRecord generic;
  IdentityRecord identity;
  std::vector<std::string> violations;
  bool operator==(const AnalyzeRecord&) const = default;
};

struct StructureRecord {
  bool ok = true;
  std::vector<std::string> detail;
  bool operator==(const StructureRecord&) const = default;
};

struct CensusRecord {
  std::string kind;
  std::string reason;
  int mu = 0;
  std::vector<QPoly> rational_classes;
  std::vector<Rational> rational_lambdas;
  long rational_count = 0;
  bool all_rational = false;
  bool size_bound_ok = true;
  std::optional<bool> divisibility_ok;
  std::optional<StructureRecord> pair_structure;
  std::optional<std::string> uniqueness_reason;
  bool uniqueness_ok = true;
  std::vector<std::string> violations;
  bool operator==(const CensusRecord&) const = default;
};

struct PencilReportRecord {
  NormalFormRecord normal_form;
  PencilRecord pencil;
  int mu = 0;
  bool one_place = false;
  IdentityRecord identity;
  std::vector<FiberRecord> critical_fibers;
  FiberRecord generic;
  std::vector<std::string> violations;
  bool operator==(const PencilReportRecord&) const = default;
};

struct ImplicitizeRecord {
  QPoly x_of_t, y_of_t;
  int parametrization_degree = 1;
  NormalFormRecord normal_form;
  bool operator==(const ImplicitizeRecord&) const = default;
};

struct PairRecord {
  QBiPoly f, g;
  std::string kind;
  int intersection = 0;
  std::optional<Rational> lambda1;
  int mu = 0;
  std::optional<StructureRecord> structure;
  std::vector<std::string> violations;
  bool operator==(const PairRecord&) const = default;
};

struct LemmaRecord {
  QBiPoly H;
  int mu = 0, r = 0, delta = 0, multiplicity = 0;
  bool bound_ok = false;
  bool strict_applies = false, strict_ok = true;
  bool coords_applies = false, coords_ok = true;
  bool operator==(const LemmaRecord&) const = default;
};

struct CorpusMemberRecord {
  long index = 0;     // position among accepted members
  long candidate = 0; // position in the candidate stream
  int a = 0, b = 0;
  QPoly x_of_t, y_of_t;
  QBiPoly f;
  int n = 0;
  int mu = 0;
  std::optional<int> r_inf, mu_inf;
  bool d_regular = false;
  int A_f = 0;
  bool identity_ok = false;
  bool bezout_ok = true;
  bool star_ok = true;
  std::optional<int> generic_genus;
  std::string census;
  long rational_count = 0;
  std::vector<Rational> rational_lambdas;
  std::vector<std::string> violations;
  bool operator==(const CorpusMemberRecord&) const = default;
};

struct CorpusSummaryRecord {
  long members = 0;
  long discarded = 0;  // candidates rejected (not proper, or more than one place at infinity)
  long census_0 = 0, census_1 = 0, census_2 = 0;
  long coordinate = 0, not_applicable = 0;
  long violations = 0;
  bool operator==(const CorpusSummaryRecord&) const = default;
};

// One common zero checked three ways: the resultant route, the quotient
// oracle and the branch sums.
struct VerifyPointRecord {
  Rational x, y;
  int local = 0, oracle = 0, branches = 0;
  bool operator==(const VerifyPointRecord&) const = default;
};

struct VerifyRecord {
  QBiPoly f, g;
  std::optional<int> global, global_oracle;  // null unless one input is monic in y
  std::vector<VerifyPointRecord> points;
  bool all_points_rational = false;  // the points listed are every common zero
  int local_sum = 0;
  std::vector<std::string> violations;
  bool operator==(const VerifyRecord&) const = default;
};

PointRecord make_record(const LocalReport& r);
FiberRecord make_record(const FiberReport& f);
NormalFormRecord make_record(const CurveNormalForm& c);
IrregularRecord make_record(const IrregularValue& v);
IdentityRecord make_record(const IdentityCheck& c);
PencilRecord make_record(const PencilData& d);
StructureRecord make_record(const StructureCheck& s);
/// The violations are those of the underlying analysis plus failed census checks.
CensusRecord make_record(const CensusVerdict& v, const PencilAnalysis& a);
PairRecord make_record(const PairReport& p, const QBiPoly& f, const QBiPoly& g);
LemmaRecord make_record(const LocalBoundsRecord& r, const QBiPoly& H);

#define PLACEONE_RECORD_JSON(T) \
  void to_json(Json& j, const T& r); \
  void from_json(const Json& j, T& r);

PLACEONE_RECORD_JSON(PointRecord)
PLACEONE_RECORD_JSON(FiberRecord)
PLACEONE_RECORD_JSON(NormalFormRecord)
PLACEONE_RECORD_JSON(IrregularRecord)
PLACEONE_RECORD_JSON(IdentityRecord)
PLACEONE_RECORD_JSON(PencilRecord)
PLACEONE_RECORD_JSON(AnalyzeRecord)
PLACEONE_RECORD_JSON(StructureRecord)
PLACEONE_RECORD_JSON(CensusRecord)
PLACEONE_RECORD_JSON(PencilReportRecord)
PLACEONE_RECORD_JSON(ImplicitizeRecord)
PLACEONE_RECORD_JSON(PairRecord)
PLACEONE_RECORD_JSON(LemmaRecord)
PLACEONE_RECORD_JSON(CorpusMemberRecord)
PLACEONE_RECORD_JSON(CorpusSummaryRecord)
PLACEONE_RECORD_JSON(VerifyPointRecord)
PLACEONE_RECORD_JSON(VerifyRecord)

#undef PLACEONE_RECORD_JSON

/// Indented "key: value" lines; polynomials print as their text.
std::string render_text(const Json& j);

}  // namespace placeone
