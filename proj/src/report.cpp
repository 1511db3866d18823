#include "placeone/report.hpp"

#include <sstream>

namespace placeone {

Json rational_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j) { return rational_from_string(j.get<std::string>()); }

Json poly_json(const QPoly& p, const std::string& var) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(rational_json(x));
  return Json{{"text", to_string(p, var)}, {"coeffs", c}};
}

QPoly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return QPoly(std::move(c));
}

Json bipoly_json(const QBiPoly& p, const std::string& inner, const std::string& outer) {
  Json rows = Json::array();
  for (const auto& row : p.coeffs()) {
    Json c = Json::array();
    for (const auto& x : row.coeffs()) c.push_back(rational_json(x));
    rows.push_back(c);
  }
  return Json{{"text", to_string(p, inner, outer)}, {"coeffs", rows}};
}

QBiPoly bipoly_from_json(const Json& j) {
  std::vector<QPoly> rows;
  for (const auto& row : j.at("coeffs")) {
    std::vector<Rational> c;
    for (const auto& x : row) c.push_back(rational_from_json(x));
    rows.emplace_back(std::move(c));
  }
  return QBiPoly(std::move(rows));
}

namespace {

template <class T>
Json opt(const std::optional<T>& o) {
  return o ? Json(*o) : Json(nullptr);
}

Json opt_rational(const std::optional<Rational>& o) { return o ? rational_json(*o) : Json(nullptr); }

template <class T>
void get(const Json& j, const char* key, T& out) {
  j.at(key).get_to(out);
}

template <class T>
void get_opt(const Json& j, const char* key, std::optional<T>& out) {
  const Json& v = j.at(key);
  if (v.is_null())
    out.reset();
  else
    out = v.get<T>();
}

std::optional<Rational> get_opt_rational(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return rational_from_json(v);
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Builders

PointRecord make_record(const LocalReport& r) {
  PointRecord p;
  if (r.point.tower) p.tower = r.point.tower->minpoly_strings();
  p.x = to_string(r.point.x);
  p.y = to_string(r.point.y);
  p.orbit_degree = r.point.orbit_degree();
  p.mu = r.mu;
  p.r = r.r;
  p.delta = r.delta;
  p.per_member = r.per_fiber;
  return p;
}

FiberRecord make_record(const FiberReport& f) {
  FiberRecord r;
  r.lambda_poly = f.lambda_poly;
  r.lambda = f.lambda;
  r.members = f.members();
  for (const auto& s : f.singular) r.singular.push_back(make_record(s));
  r.mu_fiber = f.mu_fiber;
  r.mu_bar = f.mu_bar;
  r.int_fy = f.int_fy;
  r.A_member = f.A_member;
  r.r_inf = f.r_inf;
  r.mu_inf = f.mu_inf;
  r.singular_count = f.singular_count;
  r.sum_r_minus_1 = f.sum_r_minus_1;
  r.sum_2delta = f.sum_2delta;
  r.genus = f.genus;
  r.genus_formula = f.genus_formula;
  r.star_ok = f.star_ok;
  r.bezout_ok = f.bezout_ok;
  r.bezout_with_A = f.bezout_with_A;
  r.rational = f.rational;
  return r;
}

NormalFormRecord make_record(const CurveNormalForm& c) {
  return {c.f, c.n, c.degree_condition_holds, c.codegree_condition_holds, c.applied.describe()};
}

IrregularRecord make_record(const IrregularValue& v) { return {v.factor, v.defect}; }

IdentityRecord make_record(const IdentityCheck& c) { return {c.lambdas, c.lhs, c.rhs, c.ok}; }

PencilRecord make_record(const PencilData& d) {
  PencilRecord r;
  r.R = d.R;
  r.i = d.i;
  r.P0 = d.P0;
  r.d_regular = d.d_regular;
  for (const auto& v : d.irregular) r.irregular.push_back(make_record(v));
  r.A_f = d.A_f;
  r.all_fibers_reduced = d.all_fibers_reduced;
  return r;
}

StructureRecord make_record(const StructureCheck& s) { return {s.ok, s.detail}; }

CensusRecord make_record(const CensusVerdict& v, const PencilAnalysis& a) {
  CensusRecord r;
  r.kind = to_string(v.kind);
  r.reason = v.reason;
  r.mu = a.mu;
  r.rational_classes = v.rational_classes;
  r.rational_lambdas = v.rational_lambdas;
  r.rational_count = v.rational_count;
  r.all_rational = v.all_rational;
  r.size_bound_ok = v.size_bound_ok;
  r.divisibility_ok = v.divisibility_ok;
  if (v.pair_structure) r.pair_structure = make_record(*v.pair_structure);
  r.uniqueness_reason = v.uniqueness_reason;
  r.uniqueness_ok = v.uniqueness_ok;
  r.violations = a.violations;
  if (!v.size_bound_ok)
    r.violations.push_back("census: " + std::to_string(v.rational_count) + " rational members with mu > 0");
  if (!v.uniqueness_ok) r.violations.push_back("census: " + *v.uniqueness_reason + ", yet the rational member is not unique");
  if (v.pair_structure && !v.pair_structure->ok)
    r.violations.push_back("census: two rational members without the node structure");
  if (v.divisibility_ok && !*v.divisibility_ok) r.violations.push_back("census: deg_x a_n does not divide n");
  return r;
}

PairRecord make_record(const PairReport& p, const QBiPoly& f, const QBiPoly& g) {
  PairRecord r;
  r.f = f;
  r.g = g;
  r.kind = to_string(p.kind);
  r.intersection = p.intersection;
  r.lambda1 = p.lambda1;
  r.mu = p.mu;
  if (p.structure) r.structure = make_record(*p.structure);
  r.violations = p.violations;
  return r;
}

LemmaRecord make_record(const LocalBoundsRecord& l, const QBiPoly& H) {
  LemmaRecord r;
  r.H = H;
  r.mu = l.mu0;
  r.r = l.r;
  r.delta = delta_from(l.mu0, l.r);
  r.multiplicity = l.multiplicity;
  r.bound_ok = l.bound_ok;
  r.strict_applies = l.strict_applies;
  r.strict_ok = l.strict_ok;
  r.coords_applies = l.coords_applies;
  r.coords_ok = l.coords_ok;
  return r;
}

// ---------------------------------------------------------------------------
// JSON

void to_json(Json& j, const PointRecord& r) {
  j = Json{{"tower", r.tower}, {"x", r.x},     {"y", r.y},         {"orbit_degree", r.orbit_degree},
           {"mu", r.mu},       {"r", r.r},     {"delta", r.delta}, {"per_member", r.per_member}};
}

void from_json(const Json& j, PointRecord& r) {
  get(j, "tower", r.tower);
  get(j, "x", r.x);
  get(j, "y", r.y);
  get(j, "orbit_degree", r.orbit_degree);
  get(j, "mu", r.mu);
  get(j, "r", r.r);
  get(j, "delta", r.delta);
  get(j, "per_member", r.per_member);
}

void to_json(Json& j, const FiberRecord& r) {
  j = Json::object();
  j["lambda_poly"] = poly_json(r.lambda_poly, "l");
  j["lambda"] = opt_rational(r.lambda);
  j["members"] = r.members;
  j["singular"] = r.singular;
  j["mu_fiber"] = r.mu_fiber;
  j["mu_bar"] = r.mu_bar;
  j["int_fy"] = r.int_fy;
  j["A_member"] = r.A_member;
  j["r_inf"] = opt(r.r_inf);
  j["mu_inf"] = opt(r.mu_inf);
  j["singular_count"] = r.singular_count;
  j["sum_r_minus_1"] = r.sum_r_minus_1;
  j["sum_2delta"] = r.sum_2delta;
  j["genus"] = opt(r.genus);
  j["genus_formula"] = opt(r.genus_formula);
  j["star_ok"] = r.star_ok;
  j["bezout_ok"] = r.bezout_ok;
  j["bezout_with_A"] = r.bezout_with_A;
  j["rational"] = r.rational;
}

void from_json(const Json& j, FiberRecord& r) {
  r.lambda_poly = poly_from_json(j.at("lambda_poly"));
  r.lambda = get_opt_rational(j, "lambda");
  get(j, "members", r.members);
  get(j, "singular", r.singular);
  get(j, "mu_fiber", r.mu_fiber);
  get(j, "mu_bar", r.mu_bar);
  get(j, "int_fy", r.int_fy);
  get(j, "A_member", r.A_member);
  get_opt(j, "r_inf", r.r_inf);
  get_opt(j, "mu_inf", r.mu_inf);
  get(j, "singular_count", r.singular_count);
  get(j, "sum_r_minus_1", r.sum_r_minus_1);
  get(j, "sum_2delta", r.sum_2delta);
  get_opt(j, "genus", r.genus);
  get_opt(j, "genus_formula", r.genus_formula);
  get(j, "star_ok", r.star_ok);
  get(j, "bezout_ok", r.bezout_ok);
  get(j, "bezout_with_A", r.bezout_with_A);
  get(j, "rational", r.rational);
}

void to_json(Json& j, const NormalFormRecord& r) {
  j = Json{{"f", bipoly_json(r.f, "x", "y")},
           {"n", r.n},
           {"degree_condition", r.degree_condition},
           {"codegree_condition", r.codegree_condition},
           {"transform", r.transform}};
}

void from_json(const Json& j, NormalFormRecord& r) {
  r.f = bipoly_from_json(j.at("f"));
  get(j, "n", r.n);
  get(j, "degree_condition", r.degree_condition);
  get(j, "codegree_condition", r.codegree_condition);
  get(j, "transform", r.transform);
}

void to_json(Json& j, const IrregularRecord& r) { j = Json{{"factor", poly_json(r.factor, "l")}, {"defect", r.defect}}; }

void from_json(const Json& j, IrregularRecord& r) {
  r.factor = poly_from_json(j.at("factor"));
  get(j, "defect", r.defect);
}

void to_json(Json& j, const IdentityRecord& r) {
  j = Json{{"lambdas", rationals_json(r.lambdas)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.ok}};
}

void from_json(const Json& j, IdentityRecord& r) {
  r.lambdas = rationals_from_json(j.at("lambdas"));
  get(j, "lhs", r.lhs);
  get(j, "rhs", r.rhs);
  get(j, "ok", r.ok);
}

void to_json(Json& j, const PencilRecord& r) {
  j = Json{{"R", bipoly_json(r.R, "x", "l")},
           {"i", r.i},
           {"P0", poly_json(r.P0, "l")},
           {"d_regular", r.d_regular},
           {"irregular", r.irregular},
           {"A_f", r.A_f},
           {"all_fibers_reduced", r.all_fibers_reduced}};
}

void from_json(const Json& j, PencilRecord& r) {
  r.R = bipoly_from_json(j.at("R"));
  get(j, "i", r.i);
  r.P0 = poly_from_json(j.at("P0"));
  get(j, "d_regular", r.d_regular);
  get(j, "irregular", r.irregular);
  get(j, "A_f", r.A_f);
  get(j, "all_fibers_reduced", r.all_fibers_reduced);
}

void to_json(Json& j, const AnalyzeRecord& r) {
  j = Json{{"normal_form", r.normal_form},
           {"mu", r.mu},
           {"one_place", r.one_place},
           {"r_inf", opt(r.r_inf)},
           {"mu_inf", opt(r.mu_inf)},
           {"A_member", r.A_member},
           {"critical_points", r.critical_points},
           {"curve", r.curve},
           {"critical_fibers", r.critical_fibers},
           {"generic", r.generic},
           {"identity", r.identity},
           {"violations", r.violations}};
}

void from_json(const Json& j, AnalyzeRecord& r) {
  get(j, "normal_form", r.normal_form);
  get(j, "mu", r.mu);
  get(j, "one_place", r.one_place);
  get_opt(j, "r_inf", r.r_inf);
  get_opt(j, "mu_inf", r.mu_inf);
  get(j, "A_member", r.A_member);
  get(j, "critical_points", r.critical_points);
  get(j, "curve", r.curve);
  get(j, "critical_fibers", r.critical_fibers);
  get(j, "generic", r.generic);
  get(j, "identity", r.identity);
  get(j, "violations", r.violations);
}

void to_json(Json& j, const StructureRecord& r) { j = Json{{"ok", r.ok}, {"detail", r.detail}}; }

void from_json(const Json& j, StructureRecord& r) {
  get(j, "ok", r.ok);
  get(j, "detail", r.detail);
}

void to_json(Json& j, const CensusRecord& r) {
  Json classes = Json::array();
  for (const auto& q : r.rational_classes) classes.push_back(poly_json(q, "l"));
  j = Json{{"kind", r.kind},
           {"reason", r.reason},
           {"mu", r.mu},
           {"rational_classes", classes},
           {"rational_lambdas", rationals_json(r.rational_lambdas)},
           {"rational_count", r.rational_count},
           {"all_rational", r.all_rational},
           {"size_bound_ok", r.size_bound_ok},
           {"divisibility_ok", opt(r.divisibility_ok)},
           {"pair_structure", opt(r.pair_structure)},
           {"uniqueness_reason", opt(r.uniqueness_reason)},
           {"uniqueness_ok", r.uniqueness_ok},
           {"violations", r.violations}};
}

void from_json(const Json& j, CensusRecord& r) {
  get(j, "kind", r.kind);
  get(j, "reason", r.reason);
  get(j, "mu", r.mu);
  r.rational_classes.clear();
  for (const auto& q : j.at("rational_classes")) r.rational_classes.push_back(poly_from_json(q));
  r.rational_lambdas = rationals_from_json(j.at("rational_lambdas"));
  get(j, "rational_count", r.rational_count);
  get(j, "all_rational", r.all_rational);
  get(j, "size_bound_ok", r.size_bound_ok);
  get_opt(j, "divisibility_ok", r.divisibility_ok);
  get_opt(j, "pair_structure", r.pair_structure);
  get_opt(j, "uniqueness_reason", r.uniqueness_reason);
  get(j, "uniqueness_ok", r.uniqueness_ok);
  get(j, "violations", r.violations);
}

void to_json(Json& j, const PencilReportRecord& r) {
  j = Json{{"normal_form", r.normal_form},
           {"pencil", r.pencil},
           {"mu", r.mu},
           {"one_place", r.one_place},
           {"identity", r.identity},
           {"critical_fibers", r.critical_fibers},
           {"generic", r.generic},
           {"violations", r.violations}};
}

void from_json(const Json& j, PencilReportRecord& r) {
  get(j, "normal_form", r.normal_form);
  get(j, "pencil", r.pencil);
  get(j, "mu", r.mu);
  get(j, "one_place", r.one_place);
  get(j, "identity", r.identity);
  get(j, "critical_fibers", r.critical_fibers);
  get(j, "generic", r.generic);
  get(j, "violations", r.violations);
}

void to_json(Json& j, const ImplicitizeRecord& r) {
  j = Json{{"x_of_t", poly_json(r.x_of_t, "t")},
           {"y_of_t", poly_json(r.y_of_t, "t")},
           {"parametrization_degree", r.parametrization_degree},
           {"normal_form", r.normal_form}};
}

void from_json(const Json& j, ImplicitizeRecord& r) {
  r.x_of_t = poly_from_json(j.at("x_of_t"));
  r.y_of_t = poly_from_json(j.at("y_of_t"));
  get(j, "parametrization_degree", r.parametrization_degree);
  get(j, "normal_form", r.normal_form);
}

void to_json(Json& j, const PairRecord& r) {
  j = Json{{"f", bipoly_json(r.f, "x", "y")},
           {"g", bipoly_json(r.g, "x", "y")},
           {"kind", r.kind},
           {"intersection", r.intersection},
           {"lambda1", opt_rational(r.lambda1)},
           {"mu", r.mu},
           {"structure", opt(r.structure)},
           {"violations", r.violations}};
}

void from_json(const Json& j, PairRecord& r) {
  r.f = bipoly_from_json(j.at("f"));
  r.g = bipoly_from_json(j.at("g"));
  get(j, "kind", r.kind);
  get(j, "intersection", r.intersection);
  r.lambda1 = get_opt_rational(j, "lambda1");
  get(j, "mu", r.mu);
  get_opt(j, "structure", r.structure);
  get(j, "violations", r.violations);
}

void to_json(Json& j, const LemmaRecord& r) {
  j = Json{{"H", bipoly_json(r.H, "x", "y")},
           {"mu", r.mu},
           {"r", r.r},
           {"delta", r.delta},
           {"multiplicity", r.multiplicity},
           {"bound_ok", r.bound_ok},
           {"strict_applies", r.strict_applies},
           {"strict_ok", r.strict_ok},
           {"coords_applies", r.coords_applies},
           {"coords_ok", r.coords_ok}};
}

void from_json(const Json& j, LemmaRecord& r) {
  r.H = bipoly_from_json(j.at("H"));
  get(j, "mu", r.mu);
  get(j, "r", r.r);
  get(j, "delta", r.delta);
  get(j, "multiplicity", r.multiplicity);
  get(j, "bound_ok", r.bound_ok);
  get(j, "strict_applies", r.strict_applies);
  get(j, "strict_ok", r.strict_ok);
  get(j, "coords_applies", r.coords_applies);
  get(j, "coords_ok", r.coords_ok);
}

void to_json(Json& j, const CorpusMemberRecord& r) {
  j = Json{{"index", r.index},
           {"candidate", r.candidate},
           {"a", r.a},
           {"b", r.b},
           {"x_of_t", poly_json(r.x_of_t, "t")},
           {"y_of_t", poly_json(r.y_of_t, "t")},
           {"f", bipoly_json(r.f, "x", "y")},
           {"n", r.n},
           {"mu", r.mu},
           {"r_inf", opt(r.r_inf)},
           {"mu_inf", opt(r.mu_inf)},
           {"d_regular", r.d_regular},
           {"A_f", r.A_f},
           {"identity_ok", r.identity_ok},
           {"bezout_ok", r.bezout_ok},
           {"star_ok", r.star_ok},
           {"generic_genus", opt(r.generic_genus)},
           {"census", r.census},
           {"rational_count", r.rational_count},
           {"rational_lambdas", rationals_json(r.rational_lambdas)},
           {"violations", r.violations}};
}

void from_json(const Json& j, CorpusMemberRecord& r) {
  get(j, "index", r.index);
  get(j, "candidate", r.candidate);
  get(j, "a", r.a);
  get(j, "b", r.b);
  r.x_of_t = poly_from_json(j.at("x_of_t"));
  r.y_of_t = poly_from_json(j.at("y_of_t"));
  r.f = bipoly_from_json(j.at("f"));
  get(j, "n", r.n);
  get(j, "mu", r.mu);
  get_opt(j, "r_inf", r.r_inf);
  get_opt(j, "mu_inf", r.mu_inf);
  get(j, "d_regular", r.d_regular);
  get(j, "A_f", r.A_f);
  get(j, "identity_ok", r.identity_ok);
  get(j, "bezout_ok", r.bezout_ok);
  get(j, "star_ok", r.star_ok);
  get_opt(j, "generic_genus", r.generic_genus);
  get(j, "census", r.census);
  get(j, "rational_count", r.rational_count);
  r.rational_lambdas = rationals_from_json(j.at("rational_lambdas"));
  get(j, "violations", r.violations);
}

void to_json(Json& j, const CorpusSummaryRecord& r) {
  j = Json{{"members", r.members},       {"discarded", r.discarded},   {"census_0", r.census_0},
           {"census_1", r.census_1},     {"census_2", r.census_2},     {"coordinate", r.coordinate},
           {"not_applicable", r.not_applicable}, {"violations", r.violations}};
}

void from_json(const Json& j, CorpusSummaryRecord& r) {
  get(j, "members", r.members);
  get(j, "discarded", r.discarded);
  get(j, "census_0", r.census_0);
  get(j, "census_1", r.census_1);
  get(j, "census_2", r.census_2);
  get(j, "coordinate", r.coordinate);
  get(j, "not_applicable", r.not_applicable);
  get(j, "violations", r.violations);
}

void to_json(Json& j, const VerifyPointRecord& r) {
  j = Json{{"x", rational_json(r.x)}, {"y", rational_json(r.y)}, {"local", r.local}, {"oracle", r.oracle},
           {"branches", r.branches}};
}

void from_json(const Json& j, VerifyPointRecord& r) {
  r.x = rational_from_json(j.at("x"));
  r.y = rational_from_json(j.at("y"));
  get(j, "local", r.local);
  get(j, "oracle", r.oracle);
  get(j, "branches", r.branches);
}

void to_json(Json& j, const VerifyRecord& r) {
  j = Json{{"f", bipoly_json(r.f, "x", "y")},
           {"g", bipoly_json(r.g, "x", "y")},
           {"global", opt(r.global)},
           {"global_oracle", opt(r.global_oracle)},
           {"points", r.points},
           {"all_points_rational", r.all_points_rational},
           {"local_sum", r.local_sum},
           {"violations", r.violations}};
}

void from_json(const Json& j, VerifyRecord& r) {
  r.f = bipoly_from_json(j.at("f"));
  r.g = bipoly_from_json(j.at("g"));
  get_opt(j, "global", r.global);
  get_opt(j, "global_oracle", r.global_oracle);
  get(j, "points", r.points);
  get(j, "all_points_rational", r.all_points_rational);
  get(j, "local_sum", r.local_sum);
  get(j, "violations", r.violations);
}

// ---------------------------------------------------------------------------
// Text view

namespace {

bool is_poly(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("text") && j.contains("coeffs"); }

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (is_poly(j)) return j.at("text").get<std::string>();
  return j.dump();
}

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object() || is_poly(j);
  for (const auto& x : j)
    if (x.is_array() || (x.is_object() && !is_poly(x))) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() && !is_poly(j)) {
    for (const auto& [k, v] : j.items()) {
      if (flat(v) && !v.is_array()) {
        os << pad << k << ": " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (flat(v) && !v.is_array()) {
        os << pad << "- " << scalar(v) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace placeone
