#include "placeone/curve.hpp"

#include <sstream>

namespace placeone {

std::string AppliedTransform::describe() const {
  std::ostringstream os;
  bool any = false;
  auto sep = [&]() -> std::ostringstream& {
    if (any) os << ", ";
    any = true;
    return os;
  };
  if (swapped) sep() << "swap x<->y";
  if (!is_zero(shear_y)) sep() << "y -> y + " << shear_y.get_str() << "*x";
  if (!is_zero(shear_x)) sep() << "x -> x + " << shear_x.get_str() << "*y";
  if (scale != 1) sep() << "scale by " << scale.get_str();
  return any ? os.str() : "identity";
}

QBiPoly AppliedTransform::apply(const QBiPoly& raw) const {
  QBiPoly g = swapped ? swap_variables(raw) : raw;
  g = shear_outer(g, shear_y);
  g = shear_inner(g, shear_x);
  return g.scale(QPoly(scale));
}

bool leading_coefficient_constant(const QBiPoly& f) { return !f.is_zero() && f.lead().degree() == 0; }

CurveNormalForm curve_form(const QBiPoly& monic_f, const AppliedTransform& applied) {
  if (!leading_coefficient_constant(monic_f) || monic_f.lead().lead() != 1)
    throw InternalError("curve_form expects a polynomial monic in y");
  CurveNormalForm c;
  c.f = monic_f;
  c.n = monic_f.degree();
  c.applied = applied;
  c.degree_condition_holds = true;
  c.codegree_condition_holds = true;
  for (int k = 1; k <= c.n; ++k) {
    const int d = c.a(k).degree();
    if (d >= k) c.degree_condition_holds = false;
    if (d >= c.n - k) c.codegree_condition_holds = false;
  }
  return c;
}

namespace {

// kappa * (alpha*x + y)^d or kappa * x^d; returns the kind found.
enum class FormKind { PowerOfY, PowerOfX, PowerOfLine, Other };

FormKind classify_leading_form(const QBiPoly& f, Rational* alpha) {
  const int d = total_degree(f);
  const QBiPoly h = homogeneous_part(f, d);
  const Rational ky = coeff(h, 0, static_cast<std::size_t>(d));
  if (is_zero(ky)) {
    if (h == QBiPoly(QPoly::monomial(coeff(h, static_cast<std::size_t>(d), 0), static_cast<std::size_t>(d))))
      return FormKind::PowerOfX;
    return FormKind::Other;
  }
  const Rational a = coeff(h, 1, static_cast<std::size_t>(d - 1)) / (ky * d);
  // Compare with ky * (a*x + y)^d.
  const QBiPoly line{QPoly{Rational(0), a}, QPoly{Rational(1)}};
  const QBiPoly cand = power(line, static_cast<unsigned long>(d)).scale(QPoly(ky));
  if (cand != h) return FormKind::Other;
  *alpha = a;
  return is_zero(a) ? FormKind::PowerOfY : FormKind::PowerOfLine;
}

}  // namespace

CurveNormalForm normalize(const QBiPoly& raw, unsigned seed) {
  if (raw.is_zero() || total_degree(raw) <= 0) throw InputError("constant polynomial");
  AppliedTransform t;
  Rational alpha;
  switch (classify_leading_form(raw, &alpha)) {
    case FormKind::PowerOfY:
      break;
    case FormKind::PowerOfX:
      t.swapped = true;
      break;
    case FormKind::PowerOfLine:
      t.shear_y = -alpha;
      break;
    case FormKind::Other:
      if (leading_coefficient_constant(raw)) break;
      if (leading_coefficient_constant(swap_variables(raw))) {
        t.swapped = true;
        break;
      }
      for (unsigned k = 1;; ++k) {
        const Rational c = nth_shear_constant(k + seed);
        if (is_zero(c)) continue;
        if (leading_coefficient_constant(shear_inner(raw, c))) {
          t.shear_x = c;
          break;
        }
      }
  }
  const QBiPoly g = t.apply(raw);
  t.scale = inv(g.lead().lead());
  const QBiPoly f = g.scale(QPoly(t.scale));
  if (f.degree() >= 1 && resultant_y(f, d_outer(f)).is_zero()) throw InputError("non-reduced input");
  return curve_form(f, t);
}

int global_int(const QBiPoly& f, const QBiPoly& g) {
  const QPoly r = resultant_y(f, g);
  if (r.is_zero()) throw InputError("infinite intersection: common component");
  return r.degree();
}

int parametrization_degree(const QPoly& x_of_t, const QPoly& y_of_t) {
  // gcd_s(X(s) - X(t0), Y(s) - Y(t0)) has degree equal to the number of
  // parameters over a generic image point; sample a few t0 and keep the minimum.
  int best = -1;
  for (int t0 = 0; t0 < 6; ++t0) {
    const Rational a(t0 * 7 - 9, 1 + t0);
    const QPoly u = x_of_t - QPoly(x_of_t(a));
    const QPoly v = y_of_t - QPoly(y_of_t(a));
    const int d = gcd(u, v).degree();
    if (best < 0 || d < best) best = d;
  }
  return best;
}

CurveNormalForm implicitize(const QPoly& x_of_t, const QPoly& y_of_t) {
  if (x_of_t.degree() < 1 || y_of_t.degree() < 1) throw InputError("parametrization must be nonconstant");
  const int k = parametrization_degree(x_of_t, y_of_t);
  if (k > 1)
    throw InputError("improper parametrization: the resultant is the " + std::to_string(k) +
                     "-th power of the implicit equation");
  // Res_t(x0 - X(t), y - Y(t)) at integer x0, interpolated in x.
  const int nodes_needed = y_of_t.degree() + 1;
  std::vector<Rational> nodes;
  std::vector<QPoly> values;
  // y - Y(t) as a polynomial in t with coefficients in Q[y].
  std::vector<QPoly> b;
  for (std::size_t i = 0; i < y_of_t.size(); ++i) b.emplace_back(-y_of_t[i]);
  b[0] += QPoly::variable();
  const UPoly<QPoly> B(b);
  for (int j = 0; j < nodes_needed; ++j) {
    const Rational x0(j);
    std::vector<QPoly> a;
    for (std::size_t i = 0; i < x_of_t.size(); ++i) a.emplace_back(-x_of_t[i]);
    a[0] += QPoly(x0);
    nodes.push_back(x0);
    values.push_back(resultant<QPoly>(UPoly<QPoly>(a), B));
  }
  // Values are polynomials in y sampled at x = x0: swap to (inner x, outer y).
  QBiPoly f = swap_variables(interpolate_outer(nodes, values));
  f = f.scale(QPoly(inv(f.lead().lead())));
  if (f.degree() != x_of_t.degree()) throw InternalError("implicit equation has unexpected degree in y");
  // f(X(t), Y(t)) must vanish identically.
  QPoly acc;
  for (std::size_t j = f.size(); j-- > 0;) acc = acc * y_of_t + compose(f[j], x_of_t);
  if (!acc.is_zero()) throw InternalError("implicit equation does not vanish on the parametrization");
  return curve_form(f);
}

QBiPoly localize_at_infinity(const CurveNormalForm& c) {
  if (!c.degree_condition_holds)
    throw InputError("multiple points at infinity; localization at infinity undefined");
  std::map<std::pair<std::size_t, std::size_t>, Rational> terms;
  const auto n = static_cast<std::size_t>(c.n);
  for (std::size_t j = 0; j < c.f.size(); ++j)
    for (std::size_t i = 0; i < c.f[j].size(); ++i) {
      if (is_zero(c.f[j][i])) continue;
      // x^i y^j -> u^(n-i-j) y^j
      terms[{n - i - j, j}] = c.f[j][i];
    }
  return bipoly_from_terms(terms);
}

}  // namespace placeone
