#include "placeone/pencil.hpp"

#include <algorithm>
#include <random>
#include <variant>

namespace placeone {

namespace {

bool nonzero(const Alg& a) { return !is_zero_d5(a); }

Alg zero_in(const TowerPtr& t) { return Alg(t, Rep()); }

Alg eval_curve(const QBiPoly& f, const TowerPtr& t, const Alg& x, const Alg& y) {
  Alg acc = zero_in(t);
  for (std::size_t j = f.size(); j-- > 0;) acc = acc * y + f[j].eval<Alg>(x);
  return acc;
}

// The x^k coefficient of R as a polynomial in lambda.
QPoly x_coefficient(const QBiPoly& R, std::size_t k) {
  std::vector<Rational> c;
  for (const auto& row : R.coeffs()) c.push_back(row.coeff(k));
  return QPoly(std::move(c));
}

// deg_x R(x, lambda); -1 when R(x, lambda) vanishes.
int degree_at(const QBiPoly& R, const Alg& lambda) {
  for (int k = deg_inner(R); k >= 0; --k)
    if (nonzero(x_coefficient(R, static_cast<std::size_t>(k)).eval<Alg>(lambda))) return k;
  return -1;
}

QBiPoly member(const CurveNormalForm& c, const Rational& lambda) { return c.f - QBiPoly(QPoly(lambda)); }

QBiPoly pencil_resultant(const CurveNormalForm& c) {
  const QBiPoly fy = d_outer(c.f);
  std::vector<Rational> nodes;
  std::vector<QPoly> values;
  for (int k = 0; k < std::max(c.n, 1); ++k) {
    nodes.emplace_back(k);
    values.push_back(resultant_y(member(c, Rational(k)), fy));
  }
  return interpolate_outer(nodes, values);
}

// Pairwise coprime squarefree monic polynomials with the same roots as the
// inputs, rational roots split off as linear factors.
std::vector<QPoly> coprime_base(const std::vector<QPoly>& in) {
  std::vector<QPoly> out;
  for (const QPoly& p0 : in) {
    if (p0.degree() < 1) continue;
    QPoly p = make_monic(squarefree_part(p0));
    std::vector<QPoly> next;
    for (const QPoly& b : out) {
      const QPoly g = make_monic(gcd(p, b));
      if (g.degree() < 1) {
        next.push_back(b);
        continue;
      }
      next.push_back(g);
      const QPoly rest = exact_div(b, g);
      if (rest.degree() >= 1) next.push_back(make_monic(rest));
      p = exact_div(p, g);
    }
    if (p.degree() >= 1) next.push_back(make_monic(p));
    out = std::move(next);
  }
  std::vector<QPoly> split;
  for (const QPoly& b : out)
    for (QPoly& s : split_rational_roots(b)) split.push_back(std::move(s));
  return split;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.degree() == 1) return -a[0] < -b[0];
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

struct Critical {
  PointClass p;
  Alg lambda;
  QPoly minpoly;
};

struct Context {
  const CurveNormalForm& c;
  const EngineOptions& opt;
  const PencilData& pd;
  int mu = 0;
  bool one_place = false;
  std::optional<IntersectionMultiplicities> im;
  QBiPoly inf_res;  // n >= 2 and degree condition only
  std::vector<Critical> crit;
  std::vector<std::string>* violations;
};

struct PerValue {
  int int_fy = 0;
  int r_inf = 0;
  int mu_inf = 0;
};

PerValue per_value(const Context& cx, const TowerPtr& t, const Alg& lambda) {
  PerValue v;
  v.int_fy = degree_at(cx.pd.R, lambda);
  if (cx.c.degree_condition_holds) {
    v.r_inf = r_infinity(cx.c, t, lambda);
    v.mu_inf = cx.c.n >= 2 ? mu_infinity(cx.inf_res, t, lambda) : 0;
  }
  return v;
}

// Splits q by the root multiplicities of a characteristic polynomial whose
// roots are roots of q.
std::vector<QPoly> refine_by(const QPoly& q, const QPoly& chi) {
  std::vector<QPoly> parts;
  QPoly rest = q;
  for (const auto& [s, e] : squarefree_decompose(chi)) {
    const QPoly g = make_monic(gcd(rest, s));
    if (g.degree() < 1) continue;
    parts.push_back(g);
    rest = exact_div(rest, g);
  }
  if (rest.degree() >= 1) parts.push_back(make_monic(rest));
  if (parts.size() < 2) throw InternalError("uniformity certificate: no refinement of the fiber class");
  return parts;
}

void check_local(const Context& cx, const LocalReport& lr) {
  if (lr.mu < (lr.r - 1) * (lr.r - 1))
    cx.violations->push_back("singular point with mu_p = " + std::to_string(lr.mu) + " < (r_p - 1)^2, r_p = " +
                             std::to_string(lr.r));
  if (lr.r >= 3 && lr.mu <= lr.r - 1)
    cx.violations->push_back("singular point with r_p >= 3 and mu_p <= r_p - 1");
}

void finish_fiber(const CurveNormalForm& c, int mu, bool one_place, FiberReport& fr,
                  std::vector<std::string>* violations) {
  const std::string who = "member " + to_string(fr.lambda_poly, "lambda") + " = 0";
  const int N = (c.n - 1) * (c.n - 2);
  fr.mu_bar = mu - fr.mu_fiber;
  fr.A_member = fr.int_fy - mu - (c.n - 1);
  if (fr.mu_bar < 0) violations->push_back(who + ": mu(fiber) exceeds mu");
  if (fr.A_member < 0) violations->push_back(who + ": A(f) is negative");
  if (fr.r_inf && fr.mu_inf) {
    fr.bezout_with_A = mu + *fr.mu_inf + fr.A_member == N;
    fr.bezout_ok = fr.A_member != 0 || mu + *fr.mu_inf == N;
    if (!fr.bezout_ok) violations->push_back(who + ": mu + mu_inf != (n-1)(n-2) with A(f) = 0");
    if ((*fr.mu_inf + *fr.r_inf - 1) % 2 != 0) violations->push_back(who + ": mu_inf + r_inf - 1 is odd");
  }
  if (!one_place) return;
  if (*fr.r_inf != 1) {
    violations->push_back(who + ": more than one place at infinity in a one-place pencil");
    return;
  }
  const int two_g = fr.mu_bar + fr.A_member - fr.sum_r_minus_1 - (*fr.r_inf - 1);
  const int two_gf = N - fr.sum_2delta - (*fr.mu_inf + *fr.r_inf - 1);
  if (two_gf % 2 == 0) fr.genus_formula = two_gf / 2;
  fr.star_ok = two_g == two_gf && two_g >= 0 && two_g % 2 == 0;
  if (two_g >= 0 && two_g % 2 == 0) fr.genus = two_g / 2;
  if (!fr.star_ok)
    violations->push_back(who + ": (**) gives 2g = " + std::to_string(two_g) + ", genus formula gives " +
                          std::to_string(two_gf));
  fr.rational = fr.genus && *fr.genus == 0;
}

using FiberOutcome = std::variant<FiberReport, std::vector<QPoly>>;

FiberOutcome process_fiber(const Context& cx, const QPoly& q) {
  const TowerPtr base = Tower::rationals(cx.opt.limits);
  const auto lam_towers = adjoin(base, q);
  if (lam_towers.size() != 1) {
    std::vector<QPoly> parts;
    for (const auto& t : lam_towers) parts.push_back(base_polynomial(t));
    return parts;
  }
  const auto values = split_run<PerValue>(lam_towers.front(), 0, [&](const TowerPtr& leaf) {
    return per_value(cx, leaf, Alg::generator(leaf, 1));
  });
  if (values.size() != 1) {
    std::vector<QPoly> parts;
    for (const auto& [t, v] : values) parts.push_back(base_polynomial(t));
    return parts;
  }

  FiberReport fr;
  fr.lambda_poly = q;
  if (q.degree() == 1) fr.lambda = -q[0];
  const PerValue& pv = values.front().second;
  fr.int_fy = pv.int_fy;
  if (cx.c.degree_condition_holds) {
    fr.r_inf = pv.r_inf;
    fr.mu_inf = pv.mu_inf;
  }
  const long dq = q.degree();
  const BiPoly<Alg> F = lift(cx.c.f);
  for (const Critical& cr : cx.crit) {
    if (gcd(cr.minpoly, q).degree() < 1) continue;
    const auto on = split_run<bool>(cr.p.tower, 0, [&](const TowerPtr& leaf) {
      return !nonzero(q.eval<Alg>(project(cr.lambda, leaf)));
    });
    for (const auto& [leaf, on_fiber] : on) {
      if (!on_fiber) continue;
      struct Inv {
        int mu, r;
      };
      const auto invs = split_run<Inv>(leaf, 0, [&](const TowerPtr& L) {
        const PointClass p{L, project(cr.p.x, L), project(cr.p.y, L)};
        const Alg lam = project(cr.lambda, L);
        const BiPoly<Alg> member_f = project(F, L) - BiPoly<Alg>(UPoly<Alg>(lam));
        return Inv{cx.im->at(p), branch_count(member_f, p)};
      });
      for (const auto& [L, inv] : invs) {
        const QPoly chi = char_poly_over_q(project(cr.lambda, L));
        if (L->degree() % dq != 0 || chi != power(q, static_cast<unsigned long>(L->degree() / dq)))
          return refine_by(q, chi);
        LocalReport lr;
        lr.point = PointClass{L, project(cr.p.x, L), project(cr.p.y, L)};
        lr.mu = inv.mu;
        lr.r = inv.r;
        lr.delta = delta_from(inv.mu, inv.r);
        lr.per_fiber = L->degree() / dq;
        check_local(cx, lr);
        fr.mu_fiber += lr.mu * static_cast<int>(lr.per_fiber);
        fr.singular_count += static_cast<int>(lr.per_fiber);
        fr.sum_r_minus_1 += (lr.r - 1) * static_cast<int>(lr.per_fiber);
        fr.sum_2delta += 2 * lr.delta * static_cast<int>(lr.per_fiber);
        fr.singular.push_back(std::move(lr));
      }
    }
  }
  return fr;
}

}  // namespace

PencilData build_pencil(const CurveNormalForm& c, const EngineOptions& opt) {
  PencilData pd;
  pd.curve = c;
  pd.R = pencil_resultant(c);
  if (pd.R.is_zero()) throw InputError("non-reduced input: every member is singular along a component");
  pd.i = deg_inner(pd.R);
  pd.P0 = x_coefficient(pd.R, static_cast<std::size_t>(pd.i));
  pd.d_regular = pd.P0.degree() == 0;
  QPoly common;
  for (int k = 0; k <= pd.i; ++k) common = gcd(common, x_coefficient(pd.R, static_cast<std::size_t>(k)));
  pd.all_fibers_reduced = common.degree() < 1;
  if (pd.d_regular) return pd;
  const TowerPtr base = Tower::rationals(opt.limits);
  for (const QPoly& s : split_rational_roots(squarefree_part(pd.P0))) {
    for (const TowerPtr& t : adjoin(base, s)) {
      const auto parts = split_run<int>(t, 0, [&](const TowerPtr& leaf) {
        return pd.i - degree_at(pd.R, Alg::generator(leaf, 1));
      });
      for (const auto& [leaf, defect] : parts) {
        pd.irregular.push_back({base_polynomial(leaf), defect});
        pd.A_f += defect * static_cast<int>(leaf->degree());
      }
    }
  }
  std::sort(pd.irregular.begin(), pd.irregular.end(),
            [](const IrregularValue& a, const IrregularValue& b) { return poly_less(a.factor, b.factor); });
  return pd;
}

int member_int(const CurveNormalForm& c, const Rational& lambda) {
  const QPoly r = resultant_y(member(c, lambda), d_outer(c.f));
  if (r.is_zero()) throw InputError("the member f - " + lambda.get_str() + " is not reduced");
  return r.degree();
}

IdentityCheck generic_fiber_identity_check(const PencilData& pd, int mu, unsigned seed) {
  IdentityCheck ic;
  ic.rhs = mu + pd.curve.n - 1 + pd.A_f;
  std::mt19937_64 rng(seed);
  while (ic.lambdas.size() < 3) {
    const Rational lam(static_cast<long>(rng() % 61) - 30);
    if (std::find(ic.lambdas.begin(), ic.lambdas.end(), lam) != ic.lambdas.end()) continue;
    if (is_zero(pd.P0.eval<Rational>(lam))) continue;
    ic.lambdas.push_back(lam);
  }
  ic.ok = true;
  for (const auto& lam : ic.lambdas) {
    ic.lhs.push_back(member_int(pd.curve, lam));
    if (ic.lhs.back() != ic.rhs) ic.ok = false;
  }
  return ic;
}

PencilAnalysis analyze_pencil(const CurveNormalForm& c, const EngineOptions& opt) {
  PencilAnalysis a;
  a.data = build_pencil(c, opt);
  if (!a.data.all_fibers_reduced) throw InputError("non-reduced member in the pencil");
  const QBiPoly fx = d_inner(c.f), fy = d_outer(c.f);
  Context cx{c, opt, a.data, 0, false, std::nullopt, {}, {}, &a.violations};
  const std::vector<PointClass> points = critical_points(c, opt);
  if (!points.empty()) {
    cx.im.emplace(fx, fy, opt);
    a.mu = cx.im->total();
  }
  cx.mu = a.mu;
  if (c.degree_condition_holds) {
    a.r_inf = r_infinity(c);
    a.mu_inf = mu_infinity(c);
    if (c.n >= 2) cx.inf_res = infinity_resultant(c);
  }
  a.one_place = c.degree_condition_holds && *a.r_inf == 1;
  cx.one_place = a.one_place;
  if (a.one_place && !a.data.d_regular) a.violations.push_back("one place at infinity but the pencil is not d-regular");

  const TowerPtr base = Tower::rationals(opt.limits);
  std::vector<QPoly> minpolys;
  for (const PointClass& p : points) {
    const Alg lam = eval_curve(c.f, p.tower, p.x, p.y);
    cx.crit.push_back({p, lam, min_poly_over_q(lam)});
    minpolys.push_back(cx.crit.back().minpoly);
  }
  std::vector<QPoly> work = coprime_base(minpolys);
  while (!work.empty()) {
    const QPoly q = work.back();
    work.pop_back();
    FiberOutcome out = process_fiber(cx, q);
    if (auto* parts = std::get_if<std::vector<QPoly>>(&out)) {
      for (const QPoly& p : coprime_base(*parts)) work.push_back(p);
      continue;
    }
    FiberReport fr = std::get<FiberReport>(std::move(out));
    finish_fiber(c, a.mu, a.one_place, fr, &a.violations);
    a.critical.push_back(std::move(fr));
  }
  std::sort(a.critical.begin(), a.critical.end(),
            [](const FiberReport& x, const FiberReport& y) { return poly_less(x.lambda_poly, y.lambda_poly); });

  long total = 0;
  for (const auto& fr : a.critical) total += fr.mu_fiber * fr.members();
  if (total != a.mu)
    a.violations.push_back("sum of mu over critical members is " + std::to_string(total) + ", mu is " +
                           std::to_string(a.mu));

  a.identity = generic_fiber_identity_check(a.data, a.mu, opt.seed);
  if (!a.identity.ok) a.violations.push_back("int(f - lambda, f_y) differs from mu + n - 1 + A_f at a generic member");

  for (long k = 1;; ++k) {
    const Rational lam(k);
    bool special = is_zero(a.data.P0.eval<Rational>(lam));
    for (const auto& fr : a.critical) special = special || is_zero(fr.lambda_poly.eval<Rational>(lam));
    if (special) continue;
    a.generic = fiber_at(a, lam, opt);
    break;
  }
  if (!a.generic.bezout_ok) a.violations.push_back("generic member: mu + mu_inf != (n-1)(n-2) with A(f) = 0");
  if (a.one_place && !a.generic.star_ok)
    a.violations.push_back("generic member: (**) disagrees with the genus formula");
  if (a.one_place && a.generic.genus && 2 * *a.generic.genus != a.mu)
    a.violations.push_back("generic member of a one-place pencil has genus other than mu/2");
  return a;
}

FiberReport fiber_at(const PencilAnalysis& a, const Rational& lambda, const EngineOptions& opt) {
  for (const auto& fr : a.critical)
    if (fr.lambda && *fr.lambda == lambda) return fr;
  const CurveNormalForm& c = a.data.curve;
  FiberReport fr;
  fr.lambda_poly = QPoly{Rational(-lambda), Rational(1)};
  fr.lambda = lambda;
  fr.int_fy = member_int(c, lambda);
  if (c.degree_condition_holds) {
    const TowerPtr t = Tower::rationals(opt.limits);
    const Alg lam(t, Rep(lambda));
    fr.r_inf = r_infinity(c, t, lam);
    fr.mu_inf = c.n >= 2 ? mu_infinity(infinity_resultant(c), t, lam) : 0;
  }
  std::vector<std::string> sink;
  finish_fiber(c, a.mu, a.one_place, fr, &sink);
  return fr;
}

std::string to_string(CensusCase c) {
  switch (c) {
    case CensusCase::coordinate_case: return "coordinate_case";
    case CensusCase::unique_rational: return "unique_rational";
    case CensusCase::two_rational: return "two_rational";
    case CensusCase::none_rational: return "none_rational";
    case CensusCase::not_applicable: return "not_applicable";
  }
  return "";
}

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::case_i: return "case_i";
    case PairCase::case_ii: return "case_ii";
    case PairCase::case_iii: return "case_iii";
    case PairCase::undetermined: return "undetermined";
  }
  return "";
}

StructureCheck two_rational_structure_check(const PencilAnalysis& a, const std::vector<const FiberReport*>& fibers) {
  StructureCheck sc;
  long members = 0;
  for (const FiberReport* fr : fibers) {
    members += fr->members();
    const std::string who = "member " + to_string(fr->lambda_poly, "lambda") + " = 0";
    if (2 * fr->mu_fiber != a.mu) {
      sc.ok = false;
      sc.detail.push_back(who + ": mu(fiber) = " + std::to_string(fr->mu_fiber) + ", expected mu/2");
    }
    if (2 * fr->singular_count != a.mu) {
      sc.ok = false;
      sc.detail.push_back(who + ": " + std::to_string(fr->singular_count) + " singular points, expected mu/2");
    }
    for (const auto& lr : fr->singular)
      if (lr.mu != 1 || lr.r != 2) {
        sc.ok = false;
        sc.detail.push_back(who + ": singular point with mu_p = " + std::to_string(lr.mu) +
                            ", r_p = " + std::to_string(lr.r));
      }
  }
  if (members != 2) {
    sc.ok = false;
    sc.detail.push_back("expected two members, got " + std::to_string(members));
  }
  return sc;
}

CensusVerdict rational_census(const PencilAnalysis& a) {
  CensusVerdict v;
  const CurveNormalForm& c = a.data.curve;
  if (!c.degree_condition_holds) {
    v.reason = "the degree condition fails: several points at infinity";
    return v;
  }
  if (!a.one_place) {
    v.reason = "more than one place at infinity";
    return v;
  }
  if (a.mu == 0) {
    v.kind = CensusCase::coordinate_case;
    v.all_rational = true;
    const int d = c.a(c.n).degree();
    v.divisibility_ok = c.n == 1 || (d >= 1 && c.n % d == 0);
    return v;
  }
  std::vector<const FiberReport*> rational;
  for (const auto& fr : a.critical) {
    if (!fr.rational) continue;
    rational.push_back(&fr);
    v.rational_classes.push_back(fr.lambda_poly);
    if (fr.lambda) v.rational_lambdas.push_back(*fr.lambda);
    v.rational_count += fr.members();
  }
  v.size_bound_ok = v.rational_count <= 2;
  switch (v.rational_count) {
    case 0: v.kind = CensusCase::none_rational; break;
    case 1: v.kind = CensusCase::unique_rational; break;
    case 2: v.kind = CensusCase::two_rational; break;
    default: v.reason = "more than two rational members"; break;
  }
  if (v.rational_count == 2) v.pair_structure = two_rational_structure_check(a, rational);
  for (const FiberReport* fr : rational) {
    std::optional<std::string> reason;
    bool all_two = true;
    for (const auto& lr : fr->singular) {
      if (lr.r == 1 && !reason) reason = "r_p = 1 at a singular point";
      if (lr.r >= 3 && !reason) reason = "r_p >= 3 at a singular point";
      if (lr.r != 2) all_two = false;
    }
    if (!reason && all_two && 2 * fr->singular_count != a.mu)
      reason = "r_p = 2 at every singular point but the singular point count differs from mu/2";
    if (reason) {
      if (!v.uniqueness_reason) v.uniqueness_reason = reason;
      if (v.rational_count != 1) v.uniqueness_ok = false;
    }
  }
  return v;
}

PairReport classify_pair(const QBiPoly& f, const QBiPoly& g, const EngineOptions& opt) {
  auto monic = [](const QBiPoly& h) { return leading_coefficient_constant(h) && h.lead().lead() == 1; };
  if (!monic(f)) throw InputError("f is not monic in y");
  if (!monic(g)) throw InputError("g is not monic in y");
  if (f == g) throw InputError("f and g are equal");
  auto one_place_rational = [&](const QBiPoly& h, const std::string& name) {
    const CurveNormalForm c = normalize(h, opt.seed);
    PencilAnalysis an = analyze_pencil(c, opt);
    if (!an.one_place) throw InputError(name + " does not have one place at infinity");
    const FiberReport fr = fiber_at(an, Rational(0), opt);
    if (!fr.genus || *fr.genus != 0) throw InputError(name + " is not rational");
    return an;
  };
  const PencilAnalysis af = one_place_rational(f, "f");
  one_place_rational(g, "g");

  PairReport rep;
  rep.mu = af.mu;
  rep.intersection = global_int(f, g);
  if (rep.intersection > 0) {
    rep.kind = PairCase::case_iii;
    return rep;
  }
  const QBiPoly d = f - g;
  if (total_degree(d) != 0) {
    rep.kind = PairCase::undetermined;
    rep.violations.push_back("int(f, g) = 0 but f - g is not a constant");
    return rep;
  }
  rep.lambda1 = coeff(d, 0, 0);
  if (af.mu == 0) {
    rep.kind = PairCase::case_i;
    return rep;
  }
  rep.kind = PairCase::case_ii;
  // In normal-form coordinates g becomes f - scale * lambda1.
  const Rational lam = af.data.curve.applied.scale * *rep.lambda1;
  const FiberReport f0 = fiber_at(af, Rational(0), opt), f1 = fiber_at(af, lam, opt);
  rep.structure = two_rational_structure_check(af, {&f0, &f1});
  if (!rep.structure->ok) rep.violations.push_back("two rational members without the node structure");
  return rep;
}

}  // namespace placeone
