#pragma once

// Dynamic evaluation over towers of algebraic extensions of Q.
//
// A Tower is a chain of monic squarefree minimal polynomials
//   m_1(a1), m_2(a2; a1), ..., m_k(ak; a1..a(k-1))
// and presents the finite set of points (a1, ..., ak) over the algebraic
// closure: a Galois-stable collection of conjugate tuples. Nothing is
// factored up front. When an inversion meets a zero divisor, a SplitEvent is
// thrown carrying the two coprime factors of the offending level; the caller
// that owns that level (see split_run) replays its computation in each
// descendant tower.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "placeone/qpoly.hpp"
#include "placeone/upoly.hpp"

namespace placeone {

/// Recursive sparse-dense representation of a tower element. A Rep of level
/// k > 0 is a polynomial in a_k with at least two coefficients whose own
/// levels are < k; level 0 is a rational constant.
struct Rep {
  int level = 0;
  Rational q;
  std::vector<Rep> c;

  Rep() = default;
  explicit Rep(Rational r) : q(std::move(r)) {}

  bool is_zero() const { return level == 0 && sgn(q) == 0; }
  friend bool operator==(const Rep& a, const Rep& b);
};

struct TowerLimits {
  std::size_t max_depth = 8;
  long max_degree = 64;
};

struct Level {
  std::string name;
  std::vector<Rep> minpoly;  // monic: minpoly.back() == 1
  int degree() const { return static_cast<int>(minpoly.size()) - 1; }
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Tower {
 public:
  /// The rational numbers with the given guardrails.
  static TowerPtr rationals(TowerLimits limits = {});

  std::size_t depth() const { return levels_.size(); }
  long degree() const { return degree_; }
  const TowerLimits& limits() const { return limits_; }
  const Level& level(std::size_t k) const { return *levels_[k - 1]; }
  const std::shared_ptr<const Level>& level_ptr(std::size_t k) const { return levels_[k - 1]; }
  /// Tower made of the first k levels.
  TowerPtr prefix(std::size_t k) const;
  /// True when the tower is known to be a field (every nonzero element is a unit).
  bool known_field() const { return known_field_; }

  /// Levels 1..k are the same objects in both towers.
  bool shares_levels(const Tower& other, std::size_t k) const;

  /// Replaces level k by a factor of its minimal polynomial; levels above
  /// are reduced modulo the new chain.
  TowerPtr split(std::size_t k, const std::vector<Rep>& factor) const;

  /// Appends a level without any check (callers go through adjoin()).
  TowerPtr extend(const std::vector<Rep>& monic_minpoly) const;

  // Arithmetic on representations.
  Rep add(const Rep& a, const Rep& b) const;
  Rep sub(const Rep& a, const Rep& b) const;
  Rep neg(const Rep& a) const;
  Rep mul(const Rep& a, const Rep& b) const;
  /// Throws SplitEvent on a zero divisor, Error on zero.
  Rep inverse(const Rep& a) const;
  /// Reduces a representation built over an ancestor tower.
  Rep reduce(const Rep& a) const;

  /// Coordinates of a on the monomial basis a1^e1...ak^ek (e_i < deg m_i),
  /// mixed radix with level 1 varying fastest.
  std::vector<Rational> flatten(const Rep& a) const;

  /// Minimal polynomials of the levels, innermost first.
  std::vector<std::string> minpoly_strings() const;
  std::string describe() const;

 private:
  Tower() = default;
  void finish();

  std::vector<std::shared_ptr<const Level>> levels_;
  std::vector<TowerPtr> prefixes_;  // prefixes_[k] has k levels, k < depth
  TowerLimits limits_;
  long degree_ = 1;
  bool known_field_ = true;
};

/// Zero divisor witnessed at `level`: minpoly = factor_a * factor_b, coprime, both monic.
struct SplitEvent {
  TowerPtr tower;
  std::size_t level;
  std::vector<Rep> factor_a, factor_b;
};

/// Element of a tower. A null tower means a rational constant usable in any tower.
class Alg {
 public:
  Alg() = default;
  Alg(const Rational& r) : rep_(r) {}  // NOLINT: implicit lift of constants
  Alg(const int r) : rep_(Rational(r)) {}  // NOLINT
  Alg(TowerPtr t, Rep r) : tower_(std::move(t)), rep_(std::move(r)) {}

  /// The generator a_k of level k.
  static Alg generator(const TowerPtr& t, std::size_t k);

  const TowerPtr& tower() const { return tower_; }
  const Rep& rep() const { return rep_; }
  bool is_rational() const { return rep_.level == 0; }
  const Rational& rational() const { return rep_.q; }
  /// Structural zero test (no zero-divisor detection).
  bool structurally_zero() const { return rep_.is_zero(); }

  friend Alg operator+(const Alg& a, const Alg& b);
  friend Alg operator-(const Alg& a, const Alg& b);
  friend Alg operator*(const Alg& a, const Alg& b);
  friend Alg operator-(const Alg& a);
  friend bool operator==(const Alg& a, const Alg& b) { return (a - b).structurally_zero(); }

 private:
  TowerPtr tower_;
  Rep rep_;
};

inline bool is_zero(const Alg& a) { return a.structurally_zero(); }
/// Inverse; may throw SplitEvent.
Alg inv(const Alg& a);
/// Zero test in the dynamic-evaluation sense: true if a vanishes at every
/// point of its tower, false if it vanishes at none, SplitEvent otherwise.
bool is_zero_d5(const Alg& a);

/// Re-express a (built over an ancestor of t) inside t.
Alg project(const Alg& a, const TowerPtr& t);
UPoly<Alg> project(const UPoly<Alg>& p, const TowerPtr& t);
BiPoly<Alg> project(const BiPoly<Alg>& p, const TowerPtr& t);

UPoly<Alg> lift(const QPoly& p);
BiPoly<Alg> lift(const QBiPoly& p);

/// Tower obtained by adjoining a root of m (over t). The polynomial is made
/// monic and squarefree first; over a rational tower its rational roots are
/// split off. Several towers come back when m splits. Enforces the limits.
std::vector<TowerPtr> adjoin(const TowerPtr& t, const UPoly<Alg>& m);
std::vector<TowerPtr> adjoin(const TowerPtr& t, const QPoly& m);

/// Squarefree annihilating polynomial of a over Q (monic).
QPoly min_poly_over_q(const Alg& a);

/// Characteristic polynomial over Q of multiplication by a on the tower
/// algebra: the product of (z - a(P)) over the points P of the tower.
QPoly char_poly_over_q(const Alg& a);

/// The minimal polynomial of level 1 (a polynomial over Q).
QPoly base_polynomial(const TowerPtr& t);

/// Rational value of a when the tower presents a single rational point.
bool as_rational(const Alg& a, Rational* out);

std::string to_string(const Alg& a);
std::string to_string(const Rep& r, const Tower& t);

/// Runs fn(tower) and replays it in every descendant when a split of one of
/// the levels base+1..depth is thrown; splits of levels <= base propagate.
/// Results come back in a deterministic order.
template <class R>
std::vector<std::pair<TowerPtr, R>> split_run(const TowerPtr& t, std::size_t base,
                                              const std::function<R(const TowerPtr&)>& fn) {
  std::vector<std::pair<TowerPtr, R>> out;
  std::vector<TowerPtr> work{t};
  while (!work.empty()) {
    TowerPtr cur = work.back();
    work.pop_back();
    try {
      R r = fn(cur);
      out.emplace_back(cur, std::move(r));
    } catch (const SplitEvent& e) {
      if (e.level <= base || e.level > cur->depth() || !cur->shares_levels(*e.tower, e.level)) throw;
      work.push_back(cur->split(e.level, e.factor_b));
      work.push_back(cur->split(e.level, e.factor_a));
    }
  }
  return out;
}

}  // namespace placeone
