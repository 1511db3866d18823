#pragma once

// Polynomials with rational coefficients: the ground-level toolbox shared by
// every other module.

#include <string>
#include <utility>
#include <vector>

#include "placeone/bipoly.hpp"
#include "placeone/rational.hpp"
#include "placeone/upoly.hpp"

namespace placeone {

using QPoly = UPoly<Rational>;
using QBiPoly = BiPoly<Rational>;

/// Res_outer(f, g) as a polynomial in the inner variable (subresultant PRS over Q[inner]).
QPoly resultant_y(const QBiPoly& f, const QBiPoly& g);

/// Discriminant-style test: f (monic in the outer variable) has no repeated factor.
bool is_squarefree_monic(const QBiPoly& f);

/// All rational roots of p (p nonzero), ascending, without multiplicity.
std::vector<Rational> rational_roots(const QPoly& p);

/// Splits a squarefree p into its rational linear factors and the cofactor
/// (monic; the cofactor is omitted when constant). Linear factors come first.
std::vector<QPoly> split_rational_roots(const QPoly& p);

/// Lagrange interpolation through (nodes[k], values[k]).
QPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

/// Interpolates polynomial-valued samples: the k-th value is a polynomial in
/// the inner variable sampled at outer = nodes[k]. Returns the bivariate
/// polynomial of outer degree < nodes.size().
QBiPoly interpolate_outer(const std::vector<Rational>& nodes, const std::vector<QPoly>& values);

/// Content (monic gcd of the inner coefficients) and primitive part w.r.t. the outer variable.
QPoly content(const QBiPoly& f);
QBiPoly primitive_part(const QBiPoly& f);

/// Monic-in-outer-leading-term-normalized gcd in Q[inner][outer].
QBiPoly gcd(const QBiPoly& f, const QBiPoly& g);

/// Exact division in Q[inner][outer]; throws when g does not divide f.
QBiPoly exact_div(const QBiPoly& f, const QBiPoly& g);

/// Composition p(q).
QPoly compose(const QPoly& p, const QPoly& q);

/// Human-readable forms in the input grammar.
std::string to_string(const QPoly& p, const std::string& var);
std::string to_string(const QBiPoly& p, const std::string& inner, const std::string& outer);

/// Integers 0, 1, -1, 2, -2, ... used wherever a deterministic generic choice is needed.
Rational nth_shear_constant(unsigned k);

}  // namespace placeone
