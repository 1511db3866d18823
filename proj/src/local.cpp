#include "placeone/local.hpp"

namespace placeone {

namespace {

bool nonzero(const Alg& a) { return !is_zero_d5(a); }

Alg eval_at(const QBiPoly& f, const PointClass& p) {
  Alg acc(p.tower, Rep());
  for (std::size_t j = f.size(); j-- > 0;) acc = acc * p.y + f[j].eval<Alg>(p.x);
  return acc;
}

Alg eval_at(const QPoly& s, const Alg& u) { return s.eval<Alg>(u); }

// Value of the top-degree form of f at (c, 1).
Rational top_form_at(const QBiPoly& f, const Rational& c) {
  const int d = total_degree(f);
  Rational v;
  Rational cp(1);
  for (int i = 0; i <= d; ++i) {
    v += coeff(f, static_cast<std::size_t>(i), static_cast<std::size_t>(d - i)) * cp;
    cp *= c;
  }
  return v;
}

}  // namespace

PointClass rational_point(const Rational& a, const Rational& b, const EngineOptions& opt) {
  const TowerPtr t = Tower::rationals(opt.limits);
  return PointClass{t, Alg(t, Rep(a)), Alg(t, Rep(b))};
}

PointClass origin_point(const EngineOptions& opt) { return rational_point(Rational(0), Rational(0), opt); }

std::vector<PointClass> critical_points(const CurveNormalForm& c, const EngineOptions& opt) {
  const QBiPoly fx = d_inner(c.f), fy = d_outer(c.f);
  if (fx.is_zero()) {
    if (total_degree(fy) <= 0) return {};
    throw InputError("degenerate pencil: f does not depend on x");
  }
  if (total_degree(gcd(fx, fy)) > 0) throw InputError("non-isolated critical points");
  std::vector<PointClass> out;
  const QPoly r = resultant_y(fx, fy);
  if (r.degree() <= 0) return out;
  const BiPoly<Alg> Fx = lift(fx), Fy = lift(fy);
  const QBiPoly s1 = degree_one_subresultant(fx, fy);
  for (const QPoly& s : split_rational_roots(squarefree_part(r))) {
    for (const TowerPtr& t : adjoin(Tower::rationals(opt.limits), s)) {
      const auto parts = split_run<std::vector<PointClass>>(t, 0, [&](const TowerPtr& leaf) {
        std::vector<PointClass> pts;
        const Alg a = Alg::generator(leaf, 1);
        if (!s1.is_zero()) {
          const Alg lead = s1[1].eval<Alg>(a);
          if (!is_zero_d5(lead)) {
            pts.push_back({leaf, a, -s1[0].eval<Alg>(a) * inv(lead)});
            return pts;
          }
        }
        const UPoly<Alg> h = gcd(project(eval_inner(Fx, a), leaf), project(eval_inner(Fy, a), leaf));
        if (h.degree() <= 0) return pts;
        if (h.degree() == 1) {
          pts.push_back({leaf, a, -h[0]});
          return pts;
        }
        for (const TowerPtr& t2 : adjoin(leaf, h)) pts.push_back({t2, project(a, t2), Alg::generator(t2, t2->depth())});
        return pts;
      });
      for (const auto& [leaf, pts] : parts) out.insert(out.end(), pts.begin(), pts.end());
    }
  }
  return out;
}

BiPoly<Alg> translate_to(const BiPoly<Alg>& f, const PointClass& p) { return translate(project(f, p.tower), p.x, p.y); }

BiPoly<Alg> translate_to(const QBiPoly& f, const PointClass& p) { return translate_to(lift(f), p); }

IntersectionMultiplicities::IntersectionMultiplicities(const QBiPoly& f_in, const QBiPoly& g_in,
                                                       const EngineOptions& opt) {
  if (f_in.is_zero() || g_in.is_zero()) throw InputError("infinite local intersection: zero polynomial");
  QBiPoly f = f_in, g = g_in;
  common_ = gcd(f, g);
  if (total_degree(common_) > 0) {
    f = exact_div(f, common_);
    g = exact_div(g, common_);
  }
  f_ = f;
  g_ = g;
  for (unsigned k = 0;; ++k) {
    const Rational c = nth_shear_constant(k);
    if (is_zero(top_form_at(f, c)) || is_zero(top_form_at(g, c))) continue;
    const QBiPoly fc = shear_inner(f, c), gc = shear_inner(g, c);
    const QPoly r = resultant_y(fc, gc);
    if (r.is_zero()) throw InternalError("resultant vanishes after removing common components");
    if (r.degree() <= 0) {
      c_ = c;
      return;
    }
    const auto sq = squarefree_decompose(r);
    // Certify: above every root of r the two curves meet in a single point
    // (the common factor in y has one distinct root).
    const BiPoly<Alg> F = lift(fc), G = lift(gc);
    const QBiPoly s1 = degree_one_subresultant(fc, gc);
    bool separated = true;
    for (const auto& [s, mult] : sq) {
      for (const TowerPtr& t : adjoin(Tower::rationals(opt.limits), s)) {
        const auto degs = split_run<int>(t, 0, [&](const TowerPtr& leaf) {
          const Alg a = Alg::generator(leaf, 1);
          if (!s1.is_zero() && !is_zero_d5(s1[1].eval<Alg>(a))) return 1;
          const UPoly<Alg> h = gcd(project(eval_inner(F, a), leaf), project(eval_inner(G, a), leaf));
          return h.degree() - gcd(h, h.derivative()).degree();
        });
        for (const auto& d : degs)
          if (d.second != 1) separated = false;
        if (!separated) break;
      }
      if (!separated) break;
    }
    if (!separated) continue;
    c_ = c;
    factors_ = sq;
    for (const auto& [s, mult] : sq) total_ += s.degree() * mult;
    return;
  }
}

int IntersectionMultiplicities::at(const PointClass& p) const {
  if (total_degree(common_) > 0 && !nonzero(eval_at(common_, p)))
    throw InputError("infinite local intersection: common component through the point");
  if (nonzero(eval_at(f_, p)) || nonzero(eval_at(g_, p))) return 0;
  const Alg u = p.x - Alg(c_) * p.y;
  for (const auto& [s, mult] : factors_)
    if (!nonzero(eval_at(s, u))) return mult;
  return 0;
}

namespace {

// int_0(f, g) for curves without common components: after a shear that
// makes both y-regular and leaves the origin as their only common zero on
// x = 0, it is the x-adic valuation of Res_y.
int origin_int(const QBiPoly& f, const QBiPoly& g) {
  for (unsigned k = 0;; ++k) {
    const Rational c = nth_shear_constant(k);
    if (is_zero(top_form_at(f, c)) || is_zero(top_form_at(g, c))) continue;
    const QBiPoly fc = shear_inner(f, c), gc = shear_inner(g, c);
    const QPoly h = gcd(eval_inner(fc, Rational(0)), eval_inner(gc, Rational(0)));
    if (h.valuation() != h.degree()) continue;
    const QPoly r = resultant_y(fc, gc);
    if (r.is_zero()) throw InternalError("resultant vanishes after removing common components");
    return r.valuation();
  }
}

}  // namespace

int local_int(const QBiPoly& f, const QBiPoly& g, const PointClass& p, const EngineOptions& opt) {
  Rational a, b;
  if (!as_rational(p.x, &a) || !as_rational(p.y, &b)) return IntersectionMultiplicities(f, g, opt).at(p);
  if (f.is_zero() || g.is_zero()) throw InputError("infinite local intersection: zero polynomial");
  if (!is_zero(eval_point(f, a, b)) || !is_zero(eval_point(g, a, b))) return 0;
  QBiPoly fr = f, gr = g;
  const QBiPoly common = gcd(f, g);
  if (total_degree(common) > 0) {
    if (is_zero(eval_point(common, a, b)))
      throw InputError("infinite local intersection: common component through the point");
    fr = exact_div(f, common);
    gr = exact_div(g, common);
  }
  return origin_int(translate(fr, a, b), translate(gr, a, b));
}

int local_int_by_branches(const QBiPoly& f, const QBiPoly& g, const PointClass& p, const EngineOptions& opt) {
  if (nonzero(eval_at(f, p)) || nonzero(eval_at(g, p))) return 0;
  return branch_ord_sum(p.tower, translate_to(f, p), translate_to(g, p), opt.trunc_start);
}

int milnor_local(const QBiPoly& f, const PointClass& p, const EngineOptions& opt) {
  const QBiPoly fx = d_inner(f), fy = d_outer(f);
  if (nonzero(eval_at(fx, p)) || nonzero(eval_at(fy, p))) return 0;
  return local_int(fx, fy, p, opt);
}

int branch_count(const BiPoly<Alg>& f, const PointClass& p) { return count_branches(p.tower, translate_to(f, p)); }

int delta_from(int mu, int r) {
  const int s = mu + r - 1;
  if (s < 0 || s % 2 != 0)
    throw InternalError("parity violation: mu + r - 1 = " + std::to_string(s) + " is not even");
  return s / 2;
}

int r_infinity(const CurveNormalForm& c) {
  const TowerPtr t = Tower::rationals();
  return count_branches(t, lift(localize_at_infinity(c)));
}

int r_infinity(const CurveNormalForm& c, const TowerPtr& t, const Alg& lambda) {
  BiPoly<Alg> F = project(lift(localize_at_infinity(c)), t);
  const BiPoly<Alg> shift(UPoly<Alg>::monomial(lambda, static_cast<std::size_t>(c.n)));
  return count_branches(t, F - shift);
}

QBiPoly infinity_resultant(const CurveNormalForm& c) {
  const QBiPoly F = localize_at_infinity(c);
  const QBiPoly Fu = d_inner(F), Fy = d_outer(F);
  std::vector<Rational> nodes;
  std::vector<QPoly> values;
  for (int k = 0; k < std::max(c.n, 1); ++k) {
    const Rational lam(k);
    const QBiPoly shift(QPoly::monomial(Rational(c.n) * lam, static_cast<std::size_t>(std::max(c.n - 1, 0))));
    nodes.push_back(lam);
    values.push_back(resultant_y(Fu - shift, Fy));
  }
  return interpolate_outer(nodes, values);
}

int mu_infinity(const CurveNormalForm& c) {
  const QBiPoly F = localize_at_infinity(c);
  const QBiPoly Fu = d_inner(F), Fy = d_outer(F);
  if (c.n <= 1) return 0;  // F_y is a unit
  if (Fu.is_zero()) throw InputError("F_u vanishes identically");
  const QPoly r = resultant_y(Fu, Fy);
  if (r.is_zero()) throw InputError("infinite Milnor number at infinity");
  return r.valuation();
}

int mu_infinity(const CurveNormalForm& c, const TowerPtr& t, const Alg& lambda) {
  if (c.n <= 1) return 0;
  return mu_infinity(infinity_resultant(c), t, lambda);
}

int mu_infinity(const QBiPoly& R, const TowerPtr& t, const Alg& lambda) {
  // Coefficient of u^k is sum_j R[j][k] lambda^j.
  const int top = deg_inner(R);
  for (int k = 0; k <= top; ++k) {
    Alg v(t, Rep());
    for (std::size_t j = R.size(); j-- > 0;) v = v * lambda + Alg(R[j].coeff(static_cast<std::size_t>(k)));
    if (nonzero(v)) return k;
  }
  throw InputError("infinite Milnor number at infinity");
}

int delta_infinity(const CurveNormalForm& c) { return delta_from(mu_infinity(c), r_infinity(c)); }

LocalBoundsRecord local_bounds_check(const QBiPoly& H, const EngineOptions& opt) {
  if (H.is_zero() || !is_zero(coeff(H, 0, 0))) throw InputError("H does not vanish at the origin");
  const PointClass o = origin_point(opt);
  LocalBoundsRecord rec;
  try {
    rec.mu0 = milnor_local(H, o, opt);
  } catch (const InputError&) {
    throw InputError("H is not reduced at the origin");
  }
  rec.r = count_branches(o.tower, lift(H));
  rec.multiplicity = order_at_origin(H);
  rec.bound_ok = rec.mu0 >= (rec.r - 1) * (rec.r - 1);
  rec.strict_applies = rec.r >= 3;
  rec.strict_ok = !rec.strict_applies || rec.mu0 > rec.r - 1;
  rec.coords_applies = rec.r == 2 && rec.mu0 == 1;
  if (rec.coords_applies) {
    const Rational a = coeff(H, 2, 0), b = coeff(H, 1, 1), c = coeff(H, 0, 2);
    rec.coords_ok = rec.multiplicity == 2 && b * b - 4 * a * c != 0;
  }
  return rec;
}

}  // namespace placeone
