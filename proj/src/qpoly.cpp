#include "placeone/qpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace placeone {

QPoly resultant_y(const QBiPoly& f, const QBiPoly& g) { return resultant<QPoly>(f, g); }

bool is_squarefree_monic(const QBiPoly& f) {
  if (f.degree() <= 0) return !f.is_zero();
  return !resultant_y(f, d_outer(f)).is_zero();
}

namespace {

using ZPoly = std::vector<Integer>;

ZPoly primitive_integer(const QPoly& a) {
  Integer den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(a.size());
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    z[i] = Integer(a[i] * den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

void make_primitive(ZPoly& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder lc(b)^k a mod b, made primitive.
ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t off = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
    a.pop_back();
    make_primitive(a);
  }
  make_primitive(a);
  return a;
}

}  // namespace

template <>
QPoly gcd<Rational>(QPoly a, QPoly b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  ZPoly x = primitive_integer(a), y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> c(x.begin(), x.end());
  return make_monic(QPoly(std::move(c)));
}

namespace {

// Integer polynomial arithmetic modulo a small prime.
using ModPoly = std::vector<long long>;

void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, long long p) {
  const long long inv_lc = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const long long t = a.back() * inv_lc % p;
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = ((a[off + i] - t * b[i]) % p + p) % p;
    mod_trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool mod_coprime(ModPoly a, ModPoly b, long long p) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

Integer eval_int(const std::vector<Integer>& q, const Integer& w) {
  Integer acc = 0;
  for (std::size_t i = q.size(); i-- > 0;) acc = acc * w + q[i];
  return acc;
}

// Integer roots of a monic squarefree integer polynomial by p-adic lifting.
std::vector<Integer> monic_integer_roots(const std::vector<Integer>& q) {
  std::vector<Integer> roots;
  const std::size_t n = q.size() - 1;
  if (n == 0) return roots;
  Integer bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, Integer(abs(q[i])));
  bound += 1;

  std::vector<Integer> dq(n);
  for (std::size_t i = 1; i <= n; ++i) dq[i - 1] = q[i] * static_cast<long>(i);

  static const long long primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
                                     173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241,
                                     251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331};
  for (const long long p : primes) {
    ModPoly qm(n + 1), dm(n);
    for (std::size_t i = 0; i <= n; ++i) qm[i] = mpz_fdiv_ui(q[i].get_mpz_t(), static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < n; ++i) dm[i] = mpz_fdiv_ui(dq[i].get_mpz_t(), static_cast<unsigned long>(p));
    if (!mod_coprime(qm, dm, p)) continue;
    Integer modulus = static_cast<long>(p);
    std::vector<Integer> lifted;
    for (long long r = 0; r < p; ++r) {
      long long acc = 0;
      for (std::size_t i = qm.size(); i-- > 0;) acc = (acc * r + qm[i]) % p;
      if (acc == 0) lifted.emplace_back(static_cast<long>(r));
    }
    while (modulus <= 2 * bound) {
      const Integer next = modulus * modulus;
      for (auto& r : lifted) {
        Integer num = eval_int(q, r);
        Integer den = eval_int(dq, r);
        Integer den_inv;
        mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), next.get_mpz_t());
        r = r - num * den_inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), next.get_mpz_t());
      }
      modulus = next;
    }
    for (auto r : lifted) {
      if (2 * r > modulus) r -= modulus;
      if (eval_int(q, r) == 0) roots.push_back(r);
    }
    return roots;
  }
  throw InternalError("no suitable prime for rational root search");
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw Error("rational roots of the zero polynomial");
  std::vector<Rational> out;
  QPoly a = squarefree_part(p);
  if (a.degree() <= 0) return out;
  if (is_zero(a[0])) {
    out.emplace_back(0);
    a = exact_div(a, QPoly::variable());
  }
  if (a.degree() >= 1) {
    // Clear denominators, then w = lc * z turns the primitive integer
    // polynomial into a monic one whose rational roots are integers.
    Integer den = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) z[i] = Integer(a[i] * den);
    const std::size_t n = z.size() - 1;
    const Integer lc = z[n];
    std::vector<Integer> q(n + 1);
    Integer lcp = 1;
    for (std::size_t i = n; i-- > 0;) {
      q[i] = z[i] * lcp;
      lcp *= lc;
    }
    q[n] = 1;
    for (const auto& w : monic_integer_roots(q)) out.emplace_back(w, lc);
    for (auto& r : out) r.canonicalize();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QPoly> split_rational_roots(const QPoly& p) {
  std::vector<QPoly> out;
  if (p.degree() <= 0) return out;
  QPoly rest = make_monic(p);
  if (p.degree() == 1) return {rest};
  for (const auto& r : rational_roots(p)) {
    QPoly lin{Rational(-r), Rational(1)};
    out.push_back(lin);
    rest = exact_div(rest, lin);
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

QPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  std::vector<QPoly> v;
  v.reserve(values.size());
  for (const auto& x : values) v.emplace_back(x);
  return eval_inner(interpolate_outer(nodes, v), Rational(0));
}

QBiPoly interpolate_outer(const std::vector<Rational>& nodes, const std::vector<QPoly>& values) {
  if (nodes.size() != values.size() || nodes.empty()) throw Error("interpolation needs matching nonempty samples");
  const std::size_t n = nodes.size();
  std::vector<QPoly> out_coeffs(n);
  for (std::size_t k = 0; k < n; ++k) {
    QPoly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t m = 0; m < n; ++m) {
      if (m == k) continue;
      basis *= QPoly{Rational(-nodes[m]), Rational(1)};
      denom *= nodes[k] - nodes[m];
    }
    if (is_zero(denom)) throw Error("interpolation nodes must be distinct");
    basis = basis.scale(Rational(1) / denom);
    for (std::size_t j = 0; j < basis.size(); ++j) out_coeffs[j] += values[k].scale(basis[j]);
  }
  return QBiPoly(std::move(out_coeffs));
}

QPoly content(const QBiPoly& f) {
  QPoly c;
  for (const auto& a : f.coeffs()) c = gcd(c, a);
  return c;
}

QBiPoly primitive_part(const QBiPoly& f) {
  if (f.is_zero()) return f;
  const QPoly c = content(f);
  std::vector<QPoly> out;
  for (const auto& a : f.coeffs()) out.push_back(exact_div(a, c));
  return QBiPoly(std::move(out));
}

QBiPoly gcd(const QBiPoly& f, const QBiPoly& g) {
  if (f.is_zero() && g.is_zero()) return f;
  if (f.is_zero() || g.is_zero()) {
    const QBiPoly& h = f.is_zero() ? g : f;
    return h.scale(QPoly(inv(h.lead().lead())));
  }
  const QPoly c = gcd(content(f), content(g));
  QBiPoly a = primitive_part(f);
  QBiPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero() && b.degree() > 0) {
    QBiPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  QBiPoly result = b.is_zero() ? a : QBiPoly(QPoly(Rational(1)));
  result = result.scale(c);
  // Normalize: leading outer coefficient monic in the inner variable.
  return result.scale(QPoly(inv(result.lead().lead())));
}

QBiPoly exact_div(const QBiPoly& f, const QBiPoly& g) {
  if (g.is_zero()) throw Error("division by zero polynomial");
  std::vector<QPoly> r(f.coeffs());
  const int dg = g.degree();
  if (f.degree() < dg) {
    if (f.is_zero()) return {};
    throw InternalError("inexact bivariate division");
  }
  std::vector<QPoly> q(static_cast<std::size_t>(f.degree() - dg + 1));
  for (int i = f.degree(); i >= dg; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (r[ui].is_zero()) continue;
    const QPoly t = exact_div(r[ui], g.lead());
    q[ui - static_cast<std::size_t>(dg)] = t;
    for (int j = 0; j <= dg; ++j) {
      const auto k = ui - static_cast<std::size_t>(dg) + static_cast<std::size_t>(j);
      r[k] -= t * g[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& x : r)
    if (!x.is_zero()) throw InternalError("inexact bivariate division");
  return QBiPoly(std::move(q));
}

QPoly compose(const QPoly& p, const QPoly& q) { return p.eval<QPoly>(q); }

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& mono) {
  if (is_zero(c)) return;
  const bool neg = sgn(c) < 0;
  const Rational a = abs(c);
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  first = false;
  if (mono.empty()) {
    os << a.get_str();
  } else if (a == 1) {
    os << mono;
  } else {
    os << a.get_str() << "*" << mono;
  }
}

std::string monomial(const std::string& var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) append_term(os, first, p[i], monomial(var, i));
  return os.str();
}

std::string to_string(const QBiPoly& p, const std::string& inner, const std::string& outer) {
  if (p.is_zero()) return "0";
  // Descending total degree, then descending outer degree.
  std::vector<std::pair<std::pair<int, int>, std::pair<std::size_t, std::size_t>>> keys;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      if (!is_zero(p[j][i])) keys.push_back({{-static_cast<int>(i + j), -static_cast<int>(j)}, {i, j}});
  std::sort(keys.begin(), keys.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : keys) {
    const auto [i, j] = e;
    std::string mono = monomial(outer, j);
    const std::string xi = monomial(inner, i);
    if (!xi.empty()) mono = mono.empty() ? xi : mono + "*" + xi;
    append_term(os, first, p[j][i], mono);
  }
  return os.str();
}

Rational nth_shear_constant(unsigned k) {
  if (k == 0) return 0;
  const long m = static_cast<long>((k + 1) / 2);
  return (k % 2 == 1) ? Rational(m) : Rational(-m);
}

}  // namespace placeone
