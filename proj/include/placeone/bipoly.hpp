#pragma once

// Bivariate polynomials as univariate polynomials in an outer variable whose
// coefficients are univariate polynomials in an inner variable. The variables
// are positional: (inner, outer) is (x, y) for affine curves, (u, y) at
// infinity, (x, lambda) for the pencil resultant.

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "placeone/upoly.hpp"

namespace placeone {

template <class T>
using BiPoly = UPoly<UPoly<T>>;

/// Coefficient of inner^i * outer^j.
template <class T>
T coeff(const BiPoly<T>& p, std::size_t i, std::size_t j) {
  if (j >= p.size()) return T{};
  return p[j].coeff(i);
}

/// Builds a bivariate polynomial from (inner exponent, outer exponent) -> coefficient.
template <class T>
BiPoly<T> bipoly_from_terms(const std::map<std::pair<std::size_t, std::size_t>, T>& terms) {
  std::vector<std::vector<T>> rows;
  for (const auto& [e, c] : terms) {
    const auto [i, j] = e;
    if (rows.size() <= j) rows.resize(j + 1);
    if (rows[j].size() <= i) rows[j].resize(i + 1);
    rows[j][i] = rows[j][i] + c;
  }
  std::vector<UPoly<T>> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return BiPoly<T>(std::move(out));
}

/// A polynomial in the inner variable only.
template <class T>
BiPoly<T> lift_inner(const UPoly<T>& p) {
  return BiPoly<T>(p);
}

/// A polynomial in the outer variable only.
template <class T>
BiPoly<T> lift_outer(const UPoly<T>& p) {
  std::vector<UPoly<T>> c;
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return BiPoly<T>(std::move(c));
}

template <class T>
BiPoly<T> bipoly_constant(const T& c) {
  return BiPoly<T>(UPoly<T>(c));
}

template <class T>
int deg_inner(const BiPoly<T>& p) {
  int d = -1;
  for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

template <class T>
int deg_outer(const BiPoly<T>& p) {
  return p.degree();
}

template <class T>
int total_degree(const BiPoly<T>& p) {
  int d = -1;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!p[j].is_zero()) d = std::max(d, p[j].degree() + static_cast<int>(j));
  return d;
}

/// Lowest total degree of a nonzero term (structural); -1 for zero.
template <class T>
int order_at_origin(const BiPoly<T>& p) {
  int d = -1;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const int v = p[j].valuation();
    if (v < 0) continue;
    const int t = v + static_cast<int>(j);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

/// Homogeneous component of total degree d, as a bivariate polynomial.
template <class T>
BiPoly<T> homogeneous_part(const BiPoly<T>& p, int d) {
  std::map<std::pair<std::size_t, std::size_t>, T> terms;
  for (int j = 0; j <= std::min(d, p.degree()); ++j) {
    const int i = d - j;
    T c = p[static_cast<std::size_t>(j)].coeff(static_cast<std::size_t>(i));
    if (!is_zero(c)) terms[{static_cast<std::size_t>(i), static_cast<std::size_t>(j)}] = c;
  }
  return bipoly_from_terms(terms);
}

template <class T>
BiPoly<T> d_inner(const BiPoly<T>& p) {
  std::vector<UPoly<T>> c;
  for (const auto& a : p.coeffs()) c.push_back(a.derivative());
  return BiPoly<T>(std::move(c));
}

template <class T>
BiPoly<T> d_outer(const BiPoly<T>& p) {
  return p.derivative();
}

/// Substitute inner := a, giving a polynomial in the outer variable.
template <class T>
UPoly<T> eval_inner(const BiPoly<T>& p, const T& a) {
  std::vector<T> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) c.push_back(q.template eval<T>(a));
  return UPoly<T>(std::move(c));
}

/// Substitute outer := b, giving a polynomial in the inner variable.
template <class T>
UPoly<T> eval_outer(const BiPoly<T>& p, const T& b) {
  UPoly<T> acc;
  for (std::size_t j = p.size(); j-- > 0;) acc = acc.scale(b) + p[j];
  return acc;
}

template <class T>
T eval_point(const BiPoly<T>& p, const T& a, const T& b) {
  return eval_inner(p, a).template eval<T>(b);
}

/// Exchange the roles of the two variables.
template <class T>
BiPoly<T> swap_variables(const BiPoly<T>& p) {
  std::map<std::pair<std::size_t, std::size_t>, T> terms;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      if (!is_zero(p[j][i])) terms[{j, i}] = p[j][i];
  return bipoly_from_terms(terms);
}

/// q(x + a) for a univariate q.
template <class T>
UPoly<T> taylor_shift(const UPoly<T>& q, const T& a) {
  const UPoly<T> lin{a, T(Rational(1))};
  UPoly<T> acc;
  for (std::size_t i = q.size(); i-- > 0;) acc = acc * lin + UPoly<T>(q[i]);
  return acc;
}

/// p(inner + a, outer + b).
template <class T>
BiPoly<T> translate(const BiPoly<T>& p, const T& a, const T& b) {
  std::vector<UPoly<T>> shifted;
  shifted.reserve(p.size());
  for (const auto& q : p.coeffs()) shifted.push_back(is_zero(a) ? q : taylor_shift(q, a));
  if (is_zero(b)) return BiPoly<T>(std::move(shifted));
  const BiPoly<T> lin{UPoly<T>(b), UPoly<T>(T(Rational(1)))};
  BiPoly<T> acc;
  for (std::size_t j = shifted.size(); j-- > 0;) acc = acc * lin + BiPoly<T>(shifted[j]);
  return acc;
}

namespace detail {
inline const std::vector<std::vector<Rational>>& binomials(std::size_t n) {
  static thread_local std::vector<std::vector<Rational>> table{{Rational(1)}};
  while (table.size() <= n) {
    const auto& prev = table.back();
    std::vector<Rational> row(prev.size() + 1);
    row[0] = 1;
    row.back() = 1;
    for (std::size_t k = 1; k + 1 < row.size(); ++k) row[k] = prev[k - 1] + prev[k];
    table.push_back(std::move(row));
  }
  return table;
}
}  // namespace detail

/// p(inner + c*outer, outer).
template <class T>
BiPoly<T> shear_inner(const BiPoly<T>& p, const T& c) {
  if (is_zero(c)) return p;
  std::map<std::pair<std::size_t, std::size_t>, T> terms;
  const auto& binom = detail::binomials(static_cast<std::size_t>(std::max(deg_inner(p), 0)));
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i) {
      if (is_zero(p[j][i])) continue;
      T cp(Rational(1));
      for (std::size_t k = 0; k <= i; ++k) {
        // x^(i-k) (c y)^k
        auto& slot = terms[{i - k, j + k}];
        slot = slot + p[j][i] * cp * T(binom[i][k]);
        cp = cp * c;
      }
    }
  return bipoly_from_terms(terms);
}

/// p(inner, outer + c*inner).
template <class T>
BiPoly<T> shear_outer(const BiPoly<T>& p, const T& c) {
  return swap_variables(shear_inner(swap_variables(p), c));
}

template <class U, class T, class F>
BiPoly<U> map_coeffs(const BiPoly<T>& p, F&& f) {
  std::vector<UPoly<U>> out;
  out.reserve(p.size());
  for (const auto& q : p.coeffs()) {
    std::vector<U> c;
    c.reserve(q.size());
    for (const auto& a : q.coeffs()) c.push_back(f(a));
    out.emplace_back(std::move(c));
  }
  return BiPoly<U>(std::move(out));
}

template <class U, class T, class F>
UPoly<U> map_coeffs(const UPoly<T>& p, F&& f) {
  std::vector<U> c;
  c.reserve(p.size());
  for (const auto& a : p.coeffs()) c.push_back(f(a));
  return UPoly<U>(std::move(c));
}

}  // namespace placeone
