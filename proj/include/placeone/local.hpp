#pragma once

// Local invariants at (classes of conjugate) points: critical points,
// intersection multiplicities, Milnor numbers, branch counts, and the same
// data at the point at infinity.
//
// A PointClass presents every point of its tower at once. Functions taking a
// PointClass may throw a SplitEvent when the requested invariant is not the
// same at all of those points; run them under split_run with base 0.

#include <string>
#include <utility>
#include <vector>

#include "placeone/curve.hpp"
#include "placeone/options.hpp"
#include "placeone/puiseux.hpp"
#include "placeone/tower.hpp"

namespace placeone {

struct PointClass {
  TowerPtr tower;
  Alg x, y;
  long orbit_degree() const { return tower->degree(); }
};

/// Critical points of f, grouped by the squarefree factors of Res_y(f_x, f_y).
std::vector<PointClass> critical_points(const CurveNormalForm& c, const EngineOptions& opt = {});

/// p(x + a, y + b) with the point moved to the origin, over the point's tower.
BiPoly<Alg> translate_to(const BiPoly<Alg>& f, const PointClass& p);
BiPoly<Alg> translate_to(const QBiPoly& f, const PointClass& p);

/// Local intersection numbers of a fixed pair at any point. A global shear
/// over Q separates the common zeros by their x-coordinate; the multiplicity
/// at p is then the multiplicity of x_p - c*y_p as a root of Res_y.
class IntersectionMultiplicities {
 public:
  IntersectionMultiplicities(const QBiPoly& f, const QBiPoly& g, const EngineOptions& opt = {});

  int at(const PointClass& p) const;
  const Rational& shear() const { return c_; }
  /// Sum of all local numbers (equals the global count after removing common components).
  int total() const { return total_; }

 private:
  QBiPoly f_, g_, common_;
  Rational c_;
  std::vector<std::pair<QPoly, int>> factors_;
  int total_ = 0;
};

/// int_p(f, g).
int local_int(const QBiPoly& f, const QBiPoly& g, const PointClass& p, const EngineOptions& opt = {});

/// The same number as the sum over the branches of f at p of ord_t g.
int local_int_by_branches(const QBiPoly& f, const QBiPoly& g, const PointClass& p, const EngineOptions& opt = {});

/// mu_p(f); zero at points where the gradient does not vanish.
int milnor_local(const QBiPoly& f, const PointClass& p, const EngineOptions& opt = {});

/// r_p: number of places of the germ of f at p (f may have tower coefficients).
int branch_count(const BiPoly<Alg>& f, const PointClass& p);

/// (mu + r - 1) / 2, with the parity checked.
int delta_from(int mu, int r);

int r_infinity(const CurveNormalForm& c);
int mu_infinity(const CurveNormalForm& c);
/// The same two numbers for the member f - lambda, lambda in a tower.
int r_infinity(const CurveNormalForm& c, const TowerPtr& t, const Alg& lambda);
int mu_infinity(const CurveNormalForm& c, const TowerPtr& t, const Alg& lambda);
/// Res_y(F_u - n*lambda*u^(n-1), F_y) with inner variable u and outer lambda.
QBiPoly infinity_resultant(const CurveNormalForm& c);
/// mu_infinity of f - lambda read off a precomputed infinity_resultant (n >= 2).
int mu_infinity(const QBiPoly& infinity_res, const TowerPtr& t, const Alg& lambda);
int delta_infinity(const CurveNormalForm& c);

struct LocalBoundsRecord {
  int mu0 = 0;
  int r = 0;
  bool bound_ok = false;    // mu0 >= (r - 1)^2
  bool strict_ok = true;    // r >= 3 implies mu0 > r - 1
  bool strict_applies = false;
  bool coords_ok = true;    // r = 2, mu0 = 1: two smooth transverse branches
  bool coords_applies = false;
  int multiplicity = 0;     // order of H at the origin
};

/// Checks the local statements at the origin for a germ H with H(0,0) = 0.
LocalBoundsRecord local_bounds_check(const QBiPoly& H, const EngineOptions& opt = {});

/// The origin as a rational point class.
PointClass origin_point(const EngineOptions& opt = {});
PointClass rational_point(const Rational& a, const Rational& b, const EngineOptions& opt = {});

}  // namespace placeone
