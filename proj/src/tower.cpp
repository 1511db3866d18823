#include "placeone/tower.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace placeone {

bool operator==(const Rep& a, const Rep& b) {
  if (a.level != b.level) return false;
  if (a.level == 0) return a.q == b.q;
  return a.c == b.c;
}

namespace {

Rep make_rep(int level, std::vector<Rep> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) return Rep{};
  if (c.size() == 1) return std::move(c[0]);
  Rep r;
  r.level = level;
  r.c = std::move(c);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tower construction

TowerPtr Tower::rationals(TowerLimits limits) {
  auto t = std::shared_ptr<Tower>(new Tower());
  t->limits_ = limits;
  t->finish();
  return t;
}

TowerPtr Tower::prefix(std::size_t k) const {
  if (k > depth()) throw InternalError("tower prefix out of range");
  if (k == depth()) {
    // Rebuild a handle to this tower from the chain.
    auto t = std::shared_ptr<Tower>(new Tower(*this));
    return t;
  }
  return prefixes_[k];
}

bool Tower::shares_levels(const Tower& other, std::size_t k) const {
  if (k > depth() || k > other.depth()) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (levels_[i] != other.levels_[i]) return false;
  return true;
}

TowerPtr Tower::extend(const std::vector<Rep>& monic_minpoly) const {
  auto t = std::shared_ptr<Tower>(new Tower());
  t->limits_ = limits_;
  t->levels_ = levels_;
  t->prefixes_ = prefixes_;
  t->prefixes_.push_back(std::shared_ptr<Tower>(new Tower(*this)));
  auto lvl = std::make_shared<Level>();
  lvl->name = "a" + std::to_string(depth() + 1);
  lvl->minpoly = monic_minpoly;
  t->levels_.push_back(std::move(lvl));
  t->finish();
  return t;
}

TowerPtr Tower::split(std::size_t k, const std::vector<Rep>& factor) const {
  if (k == 0 || k > depth()) throw InternalError("split level out of range");
  TowerPtr t = prefixes_[k - 1]->extend(factor);
  for (std::size_t j = k + 1; j <= depth(); ++j) {
    std::vector<Rep> m;
    for (const auto& c : level(j).minpoly) m.push_back(t->reduce(c));
    t = t->extend(m);
  }
  return t;
}

void Tower::finish() {
  degree_ = 1;
  int nontrivial = 0;
  std::size_t which = 0;
  for (std::size_t k = 1; k <= depth(); ++k) {
    degree_ *= level(k).degree();
    if (level(k).degree() > 1) {
      ++nontrivial;
      which = k;
    }
  }
  known_field_ = nontrivial == 0;
  if (nontrivial == 1 && level(which).degree() <= 3) {
    bool rational = true;
    std::vector<Rational> q;
    for (const auto& c : level(which).minpoly) {
      if (c.level != 0) rational = false;
      q.push_back(c.q);
    }
    if (rational && rational_roots(QPoly(q)).empty()) known_field_ = true;
  }
}

// ---------------------------------------------------------------------------
// Arithmetic

Rep Tower::add(const Rep& a, const Rep& b) const {
  if (a.level == 0 && b.level == 0) return Rep(a.q + b.q);
  if (a.level < b.level) return add(b, a);
  if (a.level > b.level) {
    std::vector<Rep> c = a.c;
    c[0] = add(c[0], b);
    return make_rep(a.level, std::move(c));
  }
  std::vector<Rep> c(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.c.size() && i < b.c.size())
      c[i] = add(a.c[i], b.c[i]);
    else
      c[i] = i < a.c.size() ? a.c[i] : b.c[i];
  }
  return make_rep(a.level, std::move(c));
}

Rep Tower::neg(const Rep& a) const {
  if (a.level == 0) return Rep(-a.q);
  Rep r = a;
  for (auto& x : r.c) x = neg(x);
  return r;
}

Rep Tower::sub(const Rep& a, const Rep& b) const { return add(a, neg(b)); }

namespace {

Rep reduce_poly(const Tower& t, int level, std::vector<Rep> r) {
  const auto& m = t.level(static_cast<std::size_t>(level)).minpoly;
  const std::size_t d = m.size() - 1;
  for (std::size_t i = r.size(); i-- > d;) {
    if (r[i].is_zero()) continue;
    const Rep lead = r[i];
    for (std::size_t j = 0; j < d; ++j) r[i - d + j] = t.sub(r[i - d + j], t.mul(lead, m[j]));
    r[i] = Rep{};
  }
  return make_rep(level, std::move(r));
}

}  // namespace

Rep Tower::mul(const Rep& a, const Rep& b) const {
  if (a.level == 0 && b.level == 0) return Rep(a.q * b.q);
  if (a.is_zero() || b.is_zero()) return Rep{};
  if (a.level < b.level) return mul(b, a);
  if (a.level > b.level) {
    std::vector<Rep> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mul(a.c[i], b);
    return make_rep(a.level, std::move(c));
  }
  std::vector<Rep> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = add(r[i + j], mul(a.c[i], b.c[j]));
  }
  return reduce_poly(*this, a.level, std::move(r));
}

Rep Tower::reduce(const Rep& a) const {
  if (a.level == 0) return a;
  if (static_cast<std::size_t>(a.level) > depth()) throw InternalError("element does not belong to this tower");
  std::vector<Rep> c;
  c.reserve(a.c.size());
  for (const auto& x : a.c) c.push_back(reduce(x));
  return reduce_poly(*this, a.level, std::move(c));
}

Rep Tower::inverse(const Rep& a) const {
  if (a.level == 0) {
    if (sgn(a.q) == 0) throw Error("division by zero");
    return Rep(Rational(1) / a.q);
  }
  const auto k = static_cast<std::size_t>(a.level);
  if (k == 1) {
    // Plain rational polynomials: no wrapper overhead, integer gcd.
    std::vector<Rational> ac, mc;
    for (const auto& x : a.c) ac.push_back(x.q);
    for (const auto& x : level(1).minpoly) mc.push_back(x.q);
    const QPoly A(std::move(ac)), M(std::move(mc));
    const QPoly g = gcd(A, M);
    if (g.degree() > 0) {
      SplitEvent e;
      e.tower = prefix(depth());
      e.level = 1;
      for (const auto& x : g.coeffs()) e.factor_a.emplace_back(x);
      const QPoly other = exact_div(M, g);
      for (const auto& x : other.coeffs()) e.factor_b.emplace_back(x);
      throw e;
    }
    const ExtGcd<Rational> eg = ext_gcd(A, M);
    std::vector<Rep> s;
    for (const auto& x : eg.s.coeffs()) s.emplace_back(x);
    return make_rep(1, std::move(s));
  }
  const TowerPtr below = prefixes_[k - 1];
  std::vector<Alg> ac, mc;
  for (const auto& x : a.c) ac.emplace_back(below, x);
  for (const auto& x : level(k).minpoly) mc.emplace_back(below, x);
  const UPoly<Alg> A(std::move(ac)), M(std::move(mc));
  const ExtGcd<Alg> eg = ext_gcd(A, M);
  if (eg.g.degree() > 0) {
    const UPoly<Alg> other = exact_div(M, eg.g);
    SplitEvent e;
    e.tower = prefix(depth());
    e.level = k;
    for (const auto& x : eg.g.coeffs()) e.factor_a.push_back(x.rep());
    for (const auto& x : other.coeffs()) e.factor_b.push_back(x.rep());
    throw e;
  }
  std::vector<Rep> s;
  for (const auto& x : eg.s.coeffs()) s.push_back(x.rep());
  return make_rep(a.level, std::move(s));
}

std::vector<Rational> Tower::flatten(const Rep& a) const {
  std::vector<Rational> out(static_cast<std::size_t>(degree_));
  std::vector<std::size_t> stride(depth() + 1, 1);
  for (std::size_t k = 2; k <= depth(); ++k)
    stride[k] = stride[k - 1] * static_cast<std::size_t>(level(k - 1).degree());
  std::function<void(const Rep&, std::size_t)> walk = [&](const Rep& r, std::size_t off) {
    if (r.level == 0) {
      out[off] += r.q;
      return;
    }
    for (std::size_t i = 0; i < r.c.size(); ++i) walk(r.c[i], off + i * stride[static_cast<std::size_t>(r.level)]);
  };
  walk(a, 0);
  return out;
}

std::vector<std::string> Tower::minpoly_strings() const {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= depth(); ++k) {
    std::ostringstream os;
    const auto& m = level(k).minpoly;
    bool first = true;
    for (std::size_t i = m.size(); i-- > 0;) {
      if (m[i].is_zero()) continue;
      std::string c = to_string(m[i], *this);
      std::string mono = i == 0 ? "" : (i == 1 ? level(k).name : level(k).name + "^" + std::to_string(i));
      if (!first) os << " + ";
      first = false;
      if (mono.empty())
        os << c;
      else if (c == "1")
        os << mono;
      else
        os << "(" << c << ")*" << mono;
    }
    out.push_back(os.str());
  }
  return out;
}

std::string Tower::describe() const {
  std::string s = "[";
  const auto m = minpoly_strings();
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? ", \"" : "\"") + m[k] + "\"";
  return s + "]";
}

// ---------------------------------------------------------------------------
// Elements

namespace {

TowerPtr common_tower(const Alg& a, const Alg& b) {
  const TowerPtr& ta = a.tower();
  const TowerPtr& tb = b.tower();
  if (!ta || a.is_rational()) return tb ? tb : ta;
  if (!tb || b.is_rational()) return ta;
  if (ta == tb) return ta;
  const std::size_t k = std::min(ta->depth(), tb->depth());
  if (!ta->shares_levels(*tb, k)) throw InternalError("arithmetic between unrelated towers");
  return ta->depth() >= tb->depth() ? ta : tb;
}

}  // namespace

Alg Alg::generator(const TowerPtr& t, std::size_t k) {
  Rep r;
  r.level = static_cast<int>(k);
  r.c = {Rep{}, Rep(Rational(1))};
  return Alg(t, t->reduce(r));
}

Alg operator+(const Alg& a, const Alg& b) {
  if (a.is_rational() && b.is_rational()) return Alg(common_tower(a, b), Rep(a.rational() + b.rational()));
  const TowerPtr t = common_tower(a, b);
  return Alg(t, t->add(a.rep(), b.rep()));
}

Alg operator-(const Alg& a, const Alg& b) {
  if (a.is_rational() && b.is_rational()) return Alg(common_tower(a, b), Rep(a.rational() - b.rational()));
  const TowerPtr t = common_tower(a, b);
  return Alg(t, t->sub(a.rep(), b.rep()));
}

Alg operator*(const Alg& a, const Alg& b) {
  if (a.is_rational() && b.is_rational()) return Alg(common_tower(a, b), Rep(a.rational() * b.rational()));
  const TowerPtr t = common_tower(a, b);
  return Alg(t, t->mul(a.rep(), b.rep()));
}

Alg operator-(const Alg& a) {
  if (a.is_rational()) return Alg(a.tower(), Rep(-a.rational()));
  return Alg(a.tower(), a.tower()->neg(a.rep()));
}

Alg inv(const Alg& a) {
  if (a.is_rational()) {
    if (sgn(a.rational()) == 0) throw Error("division by zero");
    return Alg(a.tower(), Rep(Rational(1) / a.rational()));
  }
  return Alg(a.tower(), a.tower()->inverse(a.rep()));
}

bool is_zero_d5(const Alg& a) {
  if (a.structurally_zero()) return true;
  if (a.is_rational() || a.tower()->known_field()) return false;
  (void)inv(a);
  return false;
}

Alg project(const Alg& a, const TowerPtr& t) {
  if (a.is_rational()) return Alg(t, a.rep());
  return Alg(t, t->reduce(a.rep()));
}

UPoly<Alg> project(const UPoly<Alg>& p, const TowerPtr& t) {
  return map_coeffs<Alg>(p, [&](const Alg& a) { return project(a, t); });
}

BiPoly<Alg> project(const BiPoly<Alg>& p, const TowerPtr& t) {
  return map_coeffs<Alg>(p, [&](const Alg& a) { return project(a, t); });
}

UPoly<Alg> lift(const QPoly& p) {
  return map_coeffs<Alg>(p, [](const Rational& a) { return Alg(a); });
}

BiPoly<Alg> lift(const QBiPoly& p) {
  return map_coeffs<Alg>(p, [](const Rational& a) { return Alg(a); });
}

bool as_rational(const Alg& a, Rational* out) {
  if (!a.is_rational()) return false;
  *out = a.rational();
  return true;
}

std::vector<TowerPtr> adjoin(const TowerPtr& t, const UPoly<Alg>& m_in) {
  const UPoly<Alg> m = project(m_in, t);
  if (m.degree() < 1) throw Error("cannot adjoin a root of a constant polynomial");
  const UPoly<Alg> sf = squarefree_part(m);
  std::vector<std::vector<Rep>> pieces;
  if (t->degree() == 1) {
    std::vector<Rational> q;
    for (const auto& c : sf.coeffs()) {
      Rational r;
      if (!as_rational(c, &r)) throw InternalError("non-rational coefficient over a rational tower");
      q.push_back(r);
    }
    for (const auto& piece : split_rational_roots(QPoly(q))) {
      std::vector<Rep> reps;
      for (const auto& c : piece.coeffs()) reps.emplace_back(c);
      pieces.push_back(std::move(reps));
    }
  } else {
    std::vector<Rep> reps;
    for (const auto& c : sf.coeffs()) reps.push_back(c.rep());
    pieces.push_back(std::move(reps));
  }
  std::vector<TowerPtr> out;
  for (const auto& p : pieces) {
    const long d = static_cast<long>(p.size()) - 1;
    if (t->depth() + 1 > t->limits().max_depth)
      throw ResourceCapError("tower depth cap (" + std::to_string(t->limits().max_depth) +
                             ") exceeded while adjoining a root of degree " + std::to_string(d));
    if (t->degree() * d > t->limits().max_degree)
      throw ResourceCapError("extension degree cap (" + std::to_string(t->limits().max_degree) +
                             ") exceeded while adjoining a root of degree " + std::to_string(d) +
                             " over a tower of degree " + std::to_string(t->degree()));
    out.push_back(t->extend(p));
  }
  return out;
}

std::vector<TowerPtr> adjoin(const TowerPtr& t, const QPoly& m) { return adjoin(t, lift(m)); }

QPoly min_poly_over_q(const Alg& a) {
  if (a.is_rational()) return QPoly{Rational(-a.rational()), Rational(1)};
  const TowerPtr& t = a.tower();
  const std::size_t dim = static_cast<std::size_t>(t->degree());
  struct Row {
    std::size_t pivot;
    std::vector<Rational> vec;
    std::vector<Rational> comb;
  };
  std::vector<Row> basis;
  Rep power(Rational(1));
  for (std::size_t i = 0; i <= dim; ++i) {
    std::vector<Rational> w = t->flatten(power);
    std::vector<Rational> comb(dim + 1);
    comb[i] = 1;
    for (const auto& b : basis) {
      const Rational f = w[b.pivot];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < dim; ++j) w[j] -= f * b.vec[j];
      for (std::size_t j = 0; j <= dim; ++j) comb[j] -= f * b.comb[j];
    }
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (!is_zero(w[j])) {
        piv = j;
        break;
      }
    if (piv == dim) {
      comb.resize(i + 1);
      return squarefree_part(QPoly(std::move(comb)));
    }
    const Rational s = Rational(1) / w[piv];
    for (auto& x : w) x *= s;
    for (auto& x : comb) x *= s;
    basis.push_back({piv, std::move(w), std::move(comb)});
    power = t->mul(power, a.rep());
  }
  throw InternalError("minimal polynomial search did not terminate");
}

QPoly char_poly_over_q(const Alg& a) {
  if (a.is_rational() && !a.tower()) return QPoly{Rational(-a.rational()), Rational(1)};
  const TowerPtr& t = a.tower();
  const auto dim = static_cast<std::size_t>(t->degree());
  // Basis a1^e1...ak^ek in flatten order, level 1 fastest.
  std::vector<Rep> basis{Rep(Rational(1))};
  for (std::size_t k = 1; k <= t->depth(); ++k) {
    const Rep g = Alg::generator(t, k).rep();
    const std::size_t m = basis.size();
    Rep gp = g;
    for (int e = 1; e < t->level(k).degree(); ++e) {
      for (std::size_t j = 0; j < m; ++j) basis.push_back(t->mul(basis[j], gp));
      gp = t->mul(gp, g);
    }
  }
  // Column j holds the coordinates of a * basis_j.
  std::vector<std::vector<Rational>> h(dim, std::vector<Rational>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const std::vector<Rational> col = t->flatten(t->mul(a.rep(), basis[j]));
    for (std::size_t i = 0; i < dim; ++i) h[i][j] = col[i];
  }
  // Reduce to upper Hessenberg form by elimination similarities.
  for (std::size_t m = 1; m + 1 < dim; ++m) {
    std::size_t piv = m;
    while (piv < dim && is_zero(h[piv][m - 1])) ++piv;
    if (piv == dim) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    for (std::size_t i = m + 1; i < dim; ++i) {
      if (is_zero(h[i][m - 1])) continue;
      const Rational f = h[i][m - 1] / h[m][m - 1];
      for (std::size_t j = 0; j < dim; ++j) h[i][j] -= f * h[m][j];
      for (auto& row : h) row[m] += f * row[i];
    }
  }
  // p_k = characteristic polynomial of the leading k x k block.
  std::vector<QPoly> p{QPoly(Rational(1))};
  const QPoly z = QPoly::variable();
  for (std::size_t k = 1; k <= dim; ++k) {
    QPoly pk = (z - QPoly(h[k - 1][k - 1])) * p[k - 1];
    Rational prod(1);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h[i + 1][i];
      if (is_zero(prod)) break;
      pk -= p[i].scale(prod * h[i][k - 1]);
    }
    p.push_back(std::move(pk));
  }
  return p[dim];
}

QPoly base_polynomial(const TowerPtr& t) {
  if (t->depth() == 0) throw InternalError("base polynomial of the rational tower");
  std::vector<Rational> q;
  for (const auto& c : t->level(1).minpoly) {
    if (c.level != 0) throw InternalError("level 1 has non-rational coefficients");
    q.push_back(c.q);
  }
  return QPoly(std::move(q));
}

std::string to_string(const Rep& r, const Tower& t) {
  if (r.level == 0) return r.q.get_str();
  const std::vector<Rational> v = t.flatten(r);
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = v.size(); idx-- > 0;) {
    if (is_zero(v[idx])) continue;
    std::string mono;
    std::size_t rest = idx;
    for (std::size_t k = 1; k <= t.depth(); ++k) {
      const auto d = static_cast<std::size_t>(t.level(k).degree());
      const std::size_t e = rest % d;
      rest /= d;
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += t.level(k).name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const Rational& c = v[idx];
    const bool neg = sgn(c) < 0;
    const Rational a = abs(c);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
  }
  return first ? "0" : os.str();
}

std::string to_string(const Alg& a) {
  if (a.is_rational() || !a.tower()) return a.rational().get_str();
  return to_string(a.rep(), *a.tower());
}

}  // namespace placeone
