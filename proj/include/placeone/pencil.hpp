#pragma once

// The pencil f - lambda of a normalized curve: the discriminant resultant
// R(x, lambda), irregular values, critical fibers with their singular points,
// genus bookkeeping, and the census of rational members.

#include <optional>
#include <string>
#include <vector>

#include "placeone/curve.hpp"
#include "placeone/local.hpp"
#include "placeone/options.hpp"

namespace placeone {

struct IrregularValue {
  QPoly factor;  // squarefree over Q; every root has the same defect
  int defect = 0;  // i - int(f - lambda_k, f_y) at each root
};

struct PencilData {
  CurveNormalForm curve;
  QBiPoly R;  // Res_y(f - lambda, f_y); inner x, outer lambda
  int i = 0;  // deg_x R
  QPoly P0;   // coefficient of x^i
  bool d_regular = false;
  std::vector<IrregularValue> irregular;
  int A_f = 0;
  /// No member f - lambda has a repeated component.
  bool all_fibers_reduced = true;
};

PencilData build_pencil(const CurveNormalForm& c, const EngineOptions& opt = {});

/// int(f - lambda, f_y), from a fresh resultant.
int member_int(const CurveNormalForm& c, const Rational& lambda);

struct IdentityCheck {
  std::vector<Rational> lambdas;
  std::vector<int> lhs;  // int(f - lambda, f_y) at each sample
  int rhs = 0;           // mu + n - 1 + A_f
  bool ok = false;
};

/// int(f - lambda, f_y) = mu + n - 1 + A_f at three seeded samples outside I(f).
IdentityCheck generic_fiber_identity_check(const PencilData& pd, int mu, unsigned seed);

struct LocalReport {
  PointClass point;
  int mu = 0;
  int r = 1;
  int delta = 0;
  long per_fiber = 1;  // points of this class on each member of the fiber class
};

struct FiberReport {
  QPoly lambda_poly;  // the fiber class is the set of roots (squarefree)
  std::optional<Rational> lambda;  // when the class is a single rational value
  std::vector<LocalReport> singular;
  int mu_fiber = 0;
  int mu_bar = 0;
  int int_fy = 0;  // int(f - lambda, f_y)
  int A_member = 0;
  std::optional<int> r_inf, mu_inf;
  int singular_count = 0;   // per member
  int sum_r_minus_1 = 0;    // per member
  int sum_2delta = 0;       // per member
  std::optional<int> genus;  // from (**), only when the pencil has one place at infinity
  std::optional<int> genus_formula;  // (n-1)(n-2)/2 - sum delta - delta_inf
  bool star_ok = true;       // (**) and the genus formula agree on a nonnegative integer
  bool bezout_ok = true;     // mu + mu_inf = (n-1)(n-2), asserted when A_member = 0
  bool bezout_with_A = true; // mu + mu_inf + A_member = (n-1)(n-2), logged only
  bool rational = false;

  long members() const { return lambda_poly.degree(); }
};

struct PencilAnalysis {
  PencilData data;
  int mu = 0;
  bool one_place = false;
  std::optional<int> r_inf, mu_inf;  // of f itself
  std::vector<FiberReport> critical;  // ordered by minimal polynomial
  FiberReport generic;
  IdentityCheck identity;
  std::vector<std::string> violations;  // failed checks
};

PencilAnalysis analyze_pencil(const CurveNormalForm& c, const EngineOptions& opt = {});

/// Report of the member f - lambda for a rational lambda (critical or not).
FiberReport fiber_at(const PencilAnalysis& a, const Rational& lambda, const EngineOptions& opt = {});

enum class CensusCase { coordinate_case, unique_rational, two_rational, none_rational, not_applicable };
std::string to_string(CensusCase c);

struct StructureCheck {
  bool ok = true;
  std::vector<std::string> detail;
};

struct CensusVerdict {
  CensusCase kind = CensusCase::not_applicable;
  std::string reason;  // why the census does not apply
  std::vector<QPoly> rational_classes;
  std::vector<Rational> rational_lambdas;  // the rational ones among them
  long rational_count = 0;
  bool all_rational = false;  // coordinate case
  bool size_bound_ok = true;
  std::optional<bool> divisibility_ok;  // deg_x a_n divides n (coordinate case)
  std::optional<StructureCheck> pair_structure;
  std::optional<std::string> uniqueness_reason;
  bool uniqueness_ok = true;
};

CensusVerdict rational_census(const PencilAnalysis& a);

/// Two rational members: each has mu/2 singular points, all with r_p = 2 and mu_p = 1.
StructureCheck two_rational_structure_check(const PencilAnalysis& a, const std::vector<const FiberReport*>& fibers);

enum class PairCase { case_i, case_ii, case_iii, undetermined };
std::string to_string(PairCase c);

struct PairReport {
  PairCase kind = PairCase::case_iii;
  int intersection = 0;
  std::optional<Rational> lambda1;  // f = g + lambda1
  int mu = 0;
  std::optional<StructureCheck> structure;
  std::vector<std::string> violations;
};

/// Both inputs monic in y, distinct, rational with one place at infinity.
PairReport classify_pair(const QBiPoly& f, const QBiPoly& g, const EngineOptions& opt = {});

}  // namespace placeone
