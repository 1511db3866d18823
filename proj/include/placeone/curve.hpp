#pragma once

// Plane curves f(x, y) over Q: normal form (monic in y, one point at
// infinity when possible), global intersection numbers, implicitization of
// polynomial parametrizations and the local equation at infinity.

#include <string>
#include <utility>
#include <vector>

#include "placeone/qpoly.hpp"

namespace placeone {

/// Change of coordinates taking the raw input to the normal form:
///   f = scale * raw(T(x, y)), T = [swap] then y -> y + shear_y*x then x -> x + shear_x*y.
struct AppliedTransform {
  bool swapped = false;
  Rational shear_y;
  Rational shear_x;
  Rational scale{1};

  std::string describe() const;
  /// Applies the transform to any polynomial given in raw coordinates.
  QBiPoly apply(const QBiPoly& raw) const;
};

struct CurveNormalForm {
  QBiPoly f;  // monic in y
  int n = 0;  // degree in y
  /// deg_x a_k < k for every k (single point at infinity (1:0:0)).
  bool degree_condition_holds = false;
  /// deg_x a_i < n - i for every i, read literally.
  bool codegree_condition_holds = false;
  AppliedTransform applied;

  /// a_k(x), the coefficient of y^(n-k).
  QPoly a(int k) const { return f.coeff(static_cast<std::size_t>(n - k)); }
};

/// Degree flags of a polynomial already monic in y.
CurveNormalForm curve_form(const QBiPoly& monic_f, const AppliedTransform& applied = {});

/// Brings f to a monic-in-y form, preferring a transform under which the
/// degree condition holds. Rejects constants and non-reduced input.
/// The seed offsets the enumeration of fallback shear constants.
CurveNormalForm normalize(const QBiPoly& raw, unsigned seed = 0);

/// deg_x Res_y(f, g) for f monic in y.
int global_int(const QBiPoly& f, const QBiPoly& g);

/// Res_t(x - X(t), y - Y(t)) made monic in y. Throws when the
/// parametrization is not proper.
CurveNormalForm implicitize(const QPoly& x_of_t, const QPoly& y_of_t);

/// Degree of the map t -> (X(t), Y(t)) onto its image.
int parametrization_degree(const QPoly& x_of_t, const QPoly& y_of_t);

/// F(y, u) = u^n f(1/u, y/u), as a polynomial with inner variable u and outer y.
QBiPoly localize_at_infinity(const CurveNormalForm& c);

/// The leading y-coefficient is a nonzero constant.
bool leading_coefficient_constant(const QBiPoly& f);

}  // namespace placeone
