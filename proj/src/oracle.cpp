#include "placeone/oracle.hpp"

#include <map>

#include "placeone/error.hpp"

namespace placeone {

namespace {

// Remainder of p modulo the monic (in y) polynomial f.
QBiPoly reduce_mod_monic(QBiPoly p, const QBiPoly& f) {
  const int n = f.degree();
  std::vector<QPoly> c(p.coeffs());
  for (int j = static_cast<int>(c.size()) - 1; j >= n; --j) {
    const QPoly t = c[static_cast<std::size_t>(j)];
    if (t.is_zero()) continue;
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(j - n + k)] -= t * f[static_cast<std::size_t>(k)];
  }
  c.resize(static_cast<std::size_t>(std::max(n, 0)));
  return QBiPoly(std::move(c));
}

Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return d;
}

}  // namespace

int quotient_dim_global(const QBiPoly& f, const QBiPoly& g) {
  if (f.is_zero() || f.lead() != QPoly(Rational(1))) throw InputError("oracle: f must be monic in y");
  const int n = f.degree();
  if (n == 0) return 0;
  // Column j: y^j * g mod f, as n polynomials in x.
  std::vector<QBiPoly> cols;
  QBiPoly m = reduce_mod_monic(g, f);
  int bound = 0;
  for (int j = 0; j < n; ++j) {
    cols.push_back(m);
    bound += std::max(deg_inner(m), 0);
    m = reduce_mod_monic(m * QBiPoly{QPoly(), QPoly(Rational(1))}, f);
  }
  std::vector<Rational> nodes, values;
  for (int k = 0; k <= bound; ++k) {
    const Rational x0(k);
    std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            cols[static_cast<std::size_t>(j)].coeff(static_cast<std::size_t>(i)).eval<Rational>(x0);
    nodes.push_back(x0);
    values.push_back(det(std::move(mat)));
  }
  const QPoly d = interpolate(nodes, values);
  if (d.is_zero()) throw InputError("oracle: infinite quotient dimension");
  return d.degree();
}

int truncated_quotient_dim(const QBiPoly& f, const QBiPoly& g, int D) {
  // Monomials of total degree < D, indexed by degree then y-exponent.
  auto index = [](int i, int j) { return (i + j) * (i + j + 1) / 2 + j; };
  const int total = D * (D + 1) / 2;
  std::map<int, std::map<int, Rational>> pivots;  // leading column -> normalized row
  for (const QBiPoly* h : {&f, &g}) {
    const int ord = order_at_origin(*h);
    if (ord < 0) continue;
    for (int s = 0; s + ord < D; ++s)
      for (int b = 0; b <= s; ++b) {
        const int a = s - b;
        std::map<int, Rational> row;
        for (std::size_t j = 0; j < h->size(); ++j)
          for (std::size_t i = 0; i < (*h)[j].size(); ++i) {
            const Rational& c = (*h)[j][i];
            if (is_zero(c)) continue;
            const int ii = static_cast<int>(i) + a, jj = static_cast<int>(j) + b;
            if (ii + jj >= D) continue;
            row[index(ii, jj)] += c;
          }
        while (!row.empty()) {
          const auto lead = row.begin();
          if (is_zero(lead->second)) {
            row.erase(lead);
            continue;
          }
          auto it = pivots.find(lead->first);
          if (it == pivots.end()) {
            const Rational s_inv = Rational(1) / lead->second;
            for (auto& [k, v] : row) v *= s_inv;
            pivots.emplace(lead->first, std::move(row));
            break;
          }
          const Rational factor = lead->second;
          for (const auto& [k, v] : it->second) {
            Rational& slot = row[k];
            slot -= factor * v;
            if (is_zero(slot)) row.erase(k);
          }
        }
      }
  }
  return total - static_cast<int>(pivots.size());
}

int quotient_dim_local(const QBiPoly& f, const QBiPoly& g, const Rational& a, const Rational& b, int max_cap) {
  const QBiPoly F = translate(f, a, b), G = translate(g, a, b);
  // Equal dimensions at D and D + 1 mean m^D lies in (F, G) + m^(D+1), hence
  // in (F, G) locally.
  int prev = -1;
  for (int D = 4; D <= max_cap; D *= 2) {
    const int cur = truncated_quotient_dim(F, G, D);
    if (cur == prev || cur == truncated_quotient_dim(F, G, D + 1)) return cur;
    prev = cur;
  }
  throw ResourceCapError("oracle cap exceeded: no stabilization up to D = " + std::to_string(max_cap));
}

}  // namespace placeone
