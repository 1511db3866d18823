#include "placeone/puiseux.hpp"

#include <numeric>

namespace placeone {

namespace {

using Series = std::vector<Alg>;  // dense, length = precision

bool nonzero(const Alg& a) { return !is_zero_d5(a); }

Series mul_trunc(const Series& a, const Series& b, std::size_t n) {
  Series r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

Series add_trunc(Series a, const Series& b, std::size_t n) {
  a.resize(n);
  for (std::size_t i = 0; i < b.size() && i < n; ++i) a[i] = a[i] + b[i];
  return a;
}

Series inv_series(const Series& a, std::size_t n) {
  Series b(n);
  const Alg a0inv = inv(a.at(0));
  b[0] = a0inv;
  for (std::size_t k = 1; k < n; ++k) {
    Alg s;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s = s + a[i] * b[k - i];
    b[k] = -(a0inv * s);
  }
  return b;
}

Series from_poly(const UPoly<Alg>& p, std::size_t n) {
  Series s(n);
  for (std::size_t i = 0; i < p.size() && i < n; ++i) s[i] = p[i];
  return s;
}

UPoly<Alg> to_poly(const Series& s) { return UPoly<Alg>(s); }

// H(X(t), Y(t)) modulo t^n.
Series eval_series(const BiPoly<Alg>& H, const Series& X, const Series& Y, std::size_t n) {
  Series acc(n);
  for (std::size_t j = H.size(); j-- > 0;) {
    acc = mul_trunc(acc, Y, n);
    Series inner(n);
    for (std::size_t i = H[j].size(); i-- > 0;) {
      inner = mul_trunc(inner, X, n);
      inner[0] = inner[0] + H[j][i];
    }
    acc = add_trunc(std::move(acc), inner, n);
  }
  return acc;
}

int y_order_at_x0(const BiPoly<Alg>& H) {
  for (std::size_t j = 0; j < H.size(); ++j)
    if (nonzero(H[j].coeff(0))) return static_cast<int>(j);
  return -1;
}

bool divisible_by_y(const BiPoly<Alg>& H) {
  if (H.size() == 0) return true;
  bool zero = true;
  for (const auto& c : H[0].coeffs())
    if (nonzero(c)) zero = false;
  return zero;
}

BiPoly<Alg> divide_by_y(const BiPoly<Alg>& H) {
  return BiPoly<Alg>(std::vector<UPoly<Alg>>(H.coeffs().begin() + 1, H.coeffs().end()));
}

struct Edge {
  int ja, ia, jb, ib;
  int p, q, u, v;
};

std::vector<Edge> newton_edges(const BiPoly<Alg>& H, int m) {
  std::vector<std::pair<int, int>> pts;  // (j, lowest i)
  for (int j = 0; j <= m && j < static_cast<int>(H.size()); ++j) {
    const auto& row = H[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < row.size(); ++i)
      if (nonzero(row[i])) {
        pts.emplace_back(j, static_cast<int>(i));
        break;
      }
  }
  std::vector<std::pair<int, int>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const long cross = static_cast<long>(a.first - o.first) * (pt.second - o.second) -
                         static_cast<long>(a.second - o.second) * (pt.first - o.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    Edge e{hull[k].first, hull[k].second, hull[k + 1].first, hull[k + 1].second, 0, 0, 0, 0};
    const int dj = e.jb - e.ja, di = e.ia - e.ib;
    if (di <= 0) throw InternalError("Newton polygon edge is not descending");
    const int g = std::gcd(dj, di);
    e.p = dj / g;
    e.q = di / g;
    if (e.q == 1) {
      e.u = 1;
      e.v = e.p - 1;
    } else {
      e.u = 1;
      while ((e.u * e.p) % e.q != 1) ++e.u;
      e.v = (e.u * e.p - 1) / e.q;
    }
    edges.push_back(e);
  }
  return edges;
}

UPoly<Alg> characteristic_poly(const BiPoly<Alg>& H, const Edge& e) {
  const int len = (e.jb - e.ja) / e.p;
  std::vector<Alg> c(static_cast<std::size_t>(len + 1));
  for (int s = 0; s <= len; ++s)
    c[static_cast<std::size_t>(s)] =
        coeff(H, static_cast<std::size_t>(e.ia - s * e.q), static_cast<std::size_t>(e.ja + s * e.p));
  return UPoly<Alg>(std::move(c));
}

// H(xi^v X^p, X^q (xi^u + Y)) / X^N.
BiPoly<Alg> substitute(const BiPoly<Alg>& H, const Edge& e, const Alg& xi) {
  const long N = static_cast<long>(e.p) * e.ia + static_cast<long>(e.q) * e.ja;
  const Alg xi_u = power(xi, static_cast<unsigned long>(e.u));
  const Alg xi_v = power(xi, static_cast<unsigned long>(e.v));
  std::vector<UPoly<Alg>> shifted_pow{UPoly<Alg>{Alg(1)}};
  const UPoly<Alg> base{xi_u, Alg(1)};
  for (std::size_t j = 1; j < H.size(); ++j) shifted_pow.push_back(shifted_pow.back() * base);
  std::size_t max_i = 0;
  for (const auto& row : H.coeffs()) max_i = std::max(max_i, row.size());
  std::vector<Alg> xv_pow{Alg(1)};
  for (std::size_t i = 1; i < max_i; ++i) xv_pow.push_back(xv_pow.back() * xi_v);

  std::vector<std::vector<Alg>> rows(H.size());
  for (std::size_t j = 0; j < H.size(); ++j)
    for (std::size_t i = 0; i < H[j].size(); ++i) {
      if (is_zero(H[j][i])) continue;
      const long ex = static_cast<long>(e.p) * static_cast<long>(i) + static_cast<long>(e.q) * static_cast<long>(j) - N;
      if (ex < 0) throw InternalError("support below the Newton polygon");
      const Alg c = H[j][i] * xv_pow[i];
      const auto& pw = shifted_pow[j];
      for (std::size_t s = 0; s < pw.size(); ++s) {
        auto& row = rows[s];
        if (row.size() <= static_cast<std::size_t>(ex)) row.resize(static_cast<std::size_t>(ex) + 1);
        row[static_cast<std::size_t>(ex)] = row[static_cast<std::size_t>(ex)] + c * pw[s];
      }
    }
  std::vector<UPoly<Alg>> out;
  for (auto& r : rows) out.emplace_back(std::move(r));
  return BiPoly<Alg>(std::move(out));
}

constexpr int kMaxDepth = 64;

long sum_split(const TowerPtr& t, std::size_t base, const std::function<long(const TowerPtr&)>& fn) {
  long s = 0;
  for (const auto& r : split_run<long>(t, base, fn)) s += r.second;
  return s;
}

// Branches at the origin summed over every point of t; H is regular in Y.
long total_branches(const TowerPtr& t, BiPoly<Alg> H, int depth) {
  if (depth > kMaxDepth) throw InputError("germ is not reduced");
  int m = y_order_at_x0(H);
  if (m < 0) throw InternalError("germ is not regular in y");
  long total = 0;
  if (m == 0) return 0;
  if (divisible_by_y(H)) {
    total += t->degree();
    H = divide_by_y(H);
    --m;
    if (m == 0) return total;
  }
  if (m == 1) return total + t->degree();
  for (const Edge& e : newton_edges(H, m)) {
    const UPoly<Alg> phi = characteristic_poly(H, e);
    for (const auto& [psi, k] : squarefree_decompose(phi)) {
      if (k == 1) {
        total += psi.degree() * t->degree();
        continue;
      }
      for (const TowerPtr& t2 : adjoin(t, psi)) {
        total += sum_split(t2, t->depth(), [&](const TowerPtr& leaf) {
          const Alg xi = Alg::generator(leaf, leaf->depth());
          return total_branches(leaf, substitute(project(H, leaf), e, xi), depth + 1);
        });
      }
    }
  }
  return total;
}

struct LocalBranch {
  TowerPtr host;
  int e;
  Alg gamma;  // X = gamma t^e exactly
  Series y;   // modulo t^n
};

Series newton_solve(const BiPoly<Alg>& H, std::size_t n) {
  const BiPoly<Alg> Hy = d_outer(H);
  Series X(n);
  if (n > 1) X[1] = Alg(1);
  Series Y(n);
  std::size_t prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    Series Xp(X.begin(), X.begin() + static_cast<std::ptrdiff_t>(prec));
    Series Yp(Y.begin(), Y.begin() + static_cast<std::ptrdiff_t>(prec));
    const Series F = eval_series(H, Xp, Yp, prec);
    const Series D = eval_series(Hy, Xp, Yp, prec);
    const Series corr = mul_trunc(F, inv_series(D, prec), prec);
    for (std::size_t i = 0; i < prec; ++i) Y[i] = Y[i] - corr[i];
  }
  return Y;
}

std::vector<LocalBranch> branches_rec(const TowerPtr& t, BiPoly<Alg> H, std::size_t n, int depth) {
  if (depth > kMaxDepth) throw InputError("germ is not reduced");
  std::vector<LocalBranch> out;
  int m = y_order_at_x0(H);
  if (m < 0) throw InternalError("germ is not regular in y");
  if (m == 0) return out;
  if (divisible_by_y(H)) {
    out.push_back({t, 1, Alg(1), Series(n)});
    H = divide_by_y(H);
    --m;
    if (m == 0) return out;
  }
  if (m == 1) {
    out.push_back({t, 1, Alg(1), newton_solve(H, n)});
    return out;
  }
  for (const Edge& e : newton_edges(H, m)) {
    const UPoly<Alg> phi = characteristic_poly(H, e);
    for (const auto& sq : squarefree_decompose(phi)) {
      for (const TowerPtr& t2 : adjoin(t, sq.first)) {
        const auto parts = split_run<std::vector<LocalBranch>>(t2, t->depth(), [&](const TowerPtr& leaf) {
          const Alg xi = Alg::generator(leaf, leaf->depth());
          std::vector<LocalBranch> mapped;
          for (auto& b : branches_rec(leaf, substitute(project(H, leaf), e, xi), n, depth + 1)) {
            const Alg x = project(xi, b.host);
            const Alg xi_u = power(x, static_cast<unsigned long>(e.u));
            const Alg xi_v = power(x, static_cast<unsigned long>(e.v));
            LocalBranch r{b.host, b.e * e.p, xi_v * power(b.gamma, static_cast<unsigned long>(e.p)), Series(n)};
            // Y = gamma1^q t^(e1 q) (xi^u + Y1)
            const Alg gq = power(b.gamma, static_cast<unsigned long>(e.q));
            const std::size_t sh = static_cast<std::size_t>(b.e) * static_cast<std::size_t>(e.q);
            for (std::size_t i = 0; i + sh < n; ++i) {
              Alg c = b.y[i];
              if (i == 0) c = c + xi_u;
              r.y[i + sh] = gq * c;
            }
            mapped.push_back(std::move(r));
          }
          return mapped;
        });
        for (const auto& [leaf, bs] : parts) out.insert(out.end(), bs.begin(), bs.end());
      }
    }
  }
  return out;
}

// Picks c with H_m(c, 1) a unit and returns H(X + cY, Y).
BiPoly<Alg> make_regular(const BiPoly<Alg>& H, int m, Rational* c_out) {
  for (unsigned k = 0;; ++k) {
    const Rational c = nth_shear_constant(k);
    Alg v;
    // H_m(c, 1) = sum over i + j = m of h_ij c^i
    std::vector<Rational> cpow{Rational(1)};
    for (int i = 1; i <= m; ++i) cpow.push_back(cpow.back() * c);
    for (int j = 0; j <= m; ++j)
      v = v + coeff(H, static_cast<std::size_t>(m - j), static_cast<std::size_t>(j)) * Alg(cpow[static_cast<std::size_t>(m - j)]);
    if (v.structurally_zero()) continue;
    try {
      (void)inv(v);
    } catch (const SplitEvent&) {
      continue;
    }
    *c_out = c;
    return shear_inner(H, Alg(c));
  }
}

BiPoly<Alg> prepare(const TowerPtr& t, const BiPoly<Alg>& H_in, Rational* c) {
  const BiPoly<Alg> H = project(H_in, t);
  if (nonzero(coeff(H, 0, 0))) throw Error("the point does not lie on the curve");
  const int m = order_d5(H);
  if (m < 0) throw InputError("zero polynomial has no branches");
  return make_regular(H, m, c);
}

}  // namespace

int order_d5(const BiPoly<Alg>& H) {
  const int top = total_degree(H);
  for (int d = 0; d <= top; ++d)
    for (int j = 0; j <= d; ++j)
      if (nonzero(coeff(H, static_cast<std::size_t>(d - j), static_cast<std::size_t>(j)))) return d;
  return -1;
}

int count_branches(const TowerPtr& t, const BiPoly<Alg>& H_in) {
  Rational c;
  const BiPoly<Alg> H = prepare(t, H_in, &c);
  const long total = total_branches(t, H, 0);
  if (total % t->degree() != 0) throw InternalError("branch count is not uniform over the point class");
  return static_cast<int>(total / t->degree());
}

std::vector<Branch> puiseux_branches(const TowerPtr& t, const BiPoly<Alg>& H_in, int truncation) {
  Rational c;
  const BiPoly<Alg> H = prepare(t, H_in, &c);
  const auto n = static_cast<std::size_t>(truncation);
  std::vector<Branch> out;
  for (auto& b : branches_rec(t, H, n, 0)) {
    Branch r;
    r.host = b.host;
    r.e = b.e;
    r.truncation = truncation;
    // Undo the shear: original x = X + c Y.
    Series x(n);
    if (static_cast<std::size_t>(b.e) < n) x[static_cast<std::size_t>(b.e)] = b.gamma;
    for (std::size_t i = 0; i < n; ++i) x[i] = x[i] + Alg(c) * b.y[i];
    r.x_series = to_poly(x);
    r.y_series = to_poly(b.y);
    out.push_back(std::move(r));
  }
  return out;
}

int branch_ord_sum(const TowerPtr& t, const BiPoly<Alg>& H, const BiPoly<Alg>& G, int trunc_start) {
  for (int n = std::max(trunc_start, 2); n <= 4096; n *= 2) {
    bool certified = true;
    long total = 0;
    for (const auto& b : puiseux_branches(t, H, n)) {
      const auto parts = split_run<long>(b.host, t->depth(), [&](const TowerPtr& leaf) -> long {
        const auto N = static_cast<std::size_t>(n);
        const Series X = from_poly(project(b.x_series, leaf), N);
        const Series Y = from_poly(project(b.y_series, leaf), N);
        const Series v = eval_series(project(G, leaf), X, Y, N);
        for (std::size_t i = 0; i < N; ++i)
          if (nonzero(v[i])) return static_cast<long>(i) * leaf->degree();
        return -1;
      });
      for (const auto& pr : parts) {
        if (pr.second < 0) certified = false;
        total += pr.second;
      }
      if (!certified) break;
    }
    if (!certified) continue;
    if (total % t->degree() != 0) throw InternalError("order sum is not uniform over the point class");
    return static_cast<int>(total / t->degree());
  }
  throw ResourceCapError("Puiseux truncation cap (4096) exceeded");
}

}  // namespace placeone
