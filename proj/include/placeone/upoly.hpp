#pragma once

// Dense univariate polynomials over a coefficient ring T.
//
// T must be default-constructible to zero, constructible from Rational, and
// provide +, -, * and a free function is_zero(const T&). Field algorithms
// (division, gcd, squarefree decomposition) additionally need inv(const T&).
// Over a tower inv() may throw a SplitEvent; every algorithm here is written
// so that such an exception leaves no partial state behind.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "placeone/error.hpp"
#include "placeone/rational.hpp"

namespace placeone {

namespace detail {
template <class T>
bool coeff_is_zero(const T& a) {
  return is_zero(a);
}
}  // namespace detail

template <class T>
class UPoly {
 public:
  using Coeff = T;

  UPoly() = default;
  explicit UPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  UPoly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit UPoly(const T& constant) : c_{constant} { trim(); }

  static UPoly monomial(const T& a, std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = a;
    return UPoly(std::move(c));
  }
  /// The polynomial x itself.
  static UPoly variable() { return monomial(T(Rational(1)), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& lead() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }

  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!placeone_is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  void set_coeff(std::size_t i, const T& a) {
    if (i >= c_.size()) c_.resize(i + 1);
    c_[i] = a;
    trim();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (placeone_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scale(const T& a) const {
    std::vector<T> r(c_);
    for (auto& x : r) x = x * a;
    return UPoly(std::move(r));
  }
  /// Multiply by x^k.
  UPoly shift(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
  }
  /// Keep the terms of degree < n.
  UPoly truncate(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return UPoly(std::vector<T>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(Rational(static_cast<long>(i)));
    return UPoly(std::move(r));
  }

  /// Horner evaluation at a point of any ring U that accepts T coefficients.
  template <class U>
  U eval(const U& x) const {
    U acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x); }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!placeone_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  static bool placeone_is_zero(const T& a) { return detail::coeff_is_zero(a); }
  void trim() {
    while (!c_.empty() && placeone_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
bool is_zero(const UPoly<T>& p) {
  return p.is_zero();
}

namespace detail {
template <class T>
struct One {
  static T get() { return T(Rational(1)); }
};
template <class T>
struct One<UPoly<T>> {
  static UPoly<T> get() { return UPoly<T>(One<T>::get()); }
};
}  // namespace detail

template <class T>
T power(const T& a, unsigned long e) {
  T r = detail::One<T>::get();
  T b = a;
  while (e) {
    if (e & 1UL) r = r * b;
    e >>= 1UL;
    if (e) b = b * b;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Field algorithms

template <class T>
std::pair<UPoly<T>, UPoly<T>> divrem(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  const T lc_inv = inv(b.lead());
  std::vector<T> r(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {UPoly<T>{}, a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (is_zero(r[ui])) continue;
    const T t = r[ui] * lc_inv;
    q[ui - static_cast<std::size_t>(db)] = t;
    for (int j = 0; j <= db; ++j) {
      const auto k = ui - static_cast<std::size_t>(db) + static_cast<std::size_t>(j);
      r[k] = r[k] - t * b[static_cast<std::size_t>(j)];
    }
    r[ui] = T{};
  }
  return {UPoly<T>(std::move(q)), UPoly<T>(std::move(r))};
}

template <class T>
UPoly<T> rem(const UPoly<T>& a, const UPoly<T>& b) {
  return divrem(a, b).second;
}

template <class T>
UPoly<T> make_monic(const UPoly<T>& a) {
  if (a.is_zero()) return a;
  return a.scale(inv(a.lead()));
}

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    UPoly<T> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// Over Q: primitive remainder sequence on integer polynomials.
template <>
UPoly<Rational> gcd<Rational>(UPoly<Rational> a, UPoly<Rational> b);

/// Returns (g, s, t) with s*a + t*b = g, g monic (or zero when a = b = 0).
template <class T>
struct ExtGcd {
  UPoly<T> g, s, t;
};

template <class T>
ExtGcd<T> ext_gcd(const UPoly<T>& a, const UPoly<T>& b) {
  UPoly<T> r0 = a, r1 = b;
  UPoly<T> s0{T(Rational(1))}, s1{};
  UPoly<T> t0{}, t1{T(Rational(1))};
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<T> s2 = s0 - q * s1;
    UPoly<T> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const T c = inv(r0.lead());
  return {r0.scale(c), s0.scale(c), t0.scale(c)};
}

/// Exact quotient a / b; throws when the division leaves a remainder.
template <class T>
UPoly<T> exact_div(const UPoly<T>& a, const UPoly<T>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

/// Yun's algorithm: pairwise coprime monic squarefree factors with their
/// multiplicities, ascending multiplicity. The product of f_i^i equals the
/// monic associate of p.
template <class T>
std::vector<std::pair<UPoly<T>, int>> squarefree_decompose(const UPoly<T>& p) {
  if (p.is_zero()) throw Error("squarefree decomposition of zero");
  std::vector<std::pair<UPoly<T>, int>> out;
  if (p.degree() == 0) return out;
  UPoly<T> a = make_monic(p);
  UPoly<T> d = a.derivative();
  UPoly<T> g = gcd(a, d);
  UPoly<T> b = exact_div(a, g);
  UPoly<T> c = exact_div(d, g);
  UPoly<T> e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly<T> h = gcd(b, e);
    b = exact_div(b, h);
    if (h.degree() > 0) out.emplace_back(h, i);
    if (b.degree() <= 0) break;
    c = exact_div(e, h);
    e = c - b.derivative();
    ++i;
  }
  return out;
}

template <class T>
UPoly<T> squarefree_part(const UPoly<T>& p) {
  if (p.degree() <= 0) return make_monic(p);
  const UPoly<T> a = make_monic(p);
  return exact_div(a, gcd(a, a.derivative()));
}

// ---------------------------------------------------------------------------
// Domain algorithms (no inverses needed)

inline Rational exact_quo(const Rational& a, const Rational& b) { return a / b; }

template <class T>
UPoly<T> exact_quo(const UPoly<T>& a, const UPoly<T>& b) {
  return exact_div(a, b);
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class D>
UPoly<D> pseudo_rem(const UPoly<D>& a, const UPoly<D>& b) {
  if (b.is_zero()) throw Error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  int e = a.degree() - b.degree() + 1;
  const UPoly<D> lcb(b.lead());
  UPoly<D> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto k = static_cast<std::size_t>(r.degree() - b.degree());
    UPoly<D> lr(r.lead());
    r = r * lcb - (b * lr).shift(k);
    --e;
  }
  return r.scale(power(b.lead(), static_cast<unsigned long>(e)));
}

/// Resultant by the subresultant polynomial remainder sequence. Fraction-free
/// over any integral domain D with exact_quo; Res(f, c) = c^deg f for c constant.
template <class D>
D resultant(UPoly<D> a, UPoly<D> b) {
  if (a.is_zero() && b.is_zero()) throw Error("undefined resultant");
  if (a.is_zero() || b.is_zero()) return D{};
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) negate = true;
    std::swap(a, b);
  }
  auto finish = [&](D r) { return negate ? D(-r) : r; };
  if (b.degree() == 0) return finish(power(b.lead(), static_cast<unsigned long>(a.degree())));
  D g(Rational(1));
  D h(Rational(1));
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) negate = !negate;
    UPoly<D> r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.is_zero()) return D{};
    const D divisor = g * power(h, static_cast<unsigned long>(delta));
    std::vector<D> rc(r.coeffs());
    for (auto& x : rc) x = exact_quo(x, divisor);
    b = UPoly<D>(std::move(rc));
    g = a.lead();
    if (delta > 0)
      h = exact_quo(power(g, static_cast<unsigned long>(delta)), power(h, static_cast<unsigned long>(delta - 1)));
    if (b.degree() == 0) {
      const D num = power(b.lead(), static_cast<unsigned long>(a.degree()));
      const D den = power(h, static_cast<unsigned long>(a.degree() - 1));
      return finish(exact_quo(num, den));
    }
  }
}

/// A D-multiple of the first subresultant S_1 of a and b: the degree-one
/// member of the subresultant PRS, or zero when the sequence skips degree
/// one. At a common root of the specialized pair, a nonzero leading
/// coefficient of the result means the gcd there is linear and equal to it
/// up to a unit.
template <class D>
UPoly<D> degree_one_subresultant(UPoly<D> a, UPoly<D> b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() <= 1) return b.degree() == 1 ? b : UPoly<D>{};
  D g(Rational(1));
  D h(Rational(1));
  for (;;) {
    const int delta = a.degree() - b.degree();
    UPoly<D> r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.is_zero()) return {};
    const D divisor = g * power(h, static_cast<unsigned long>(delta));
    std::vector<D> rc(r.coeffs());
    for (auto& x : rc) x = exact_quo(x, divisor);
    b = UPoly<D>(std::move(rc));
    if (b.degree() <= 1) return b.degree() == 1 ? b : UPoly<D>{};
    g = a.lead();
    if (delta > 0)
      h = exact_quo(power(g, static_cast<unsigned long>(delta)), power(h, static_cast<unsigned long>(delta - 1)));
  }
}

}  // namespace placeone
