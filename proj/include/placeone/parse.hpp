#pragma once

// Polynomial input grammar: integer literals, variables, + - * / ^ and
// parentheses; whitespace-insensitive. Division is allowed only by a nonzero
// constant, so "3/4*x" and "(x+1)/2" are accepted. Exponents are
// nonnegative integer literals.

#include <map>
#include <string>
#include <vector>

#include "placeone/qpoly.hpp"

namespace placeone {

/// Sparse polynomial keyed by the exponent vector over the given variables.
using SparsePoly = std::map<std::vector<unsigned>, Rational>;

SparsePoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

/// A polynomial in x (inner) and y (outer).
QBiPoly parse_curve(const std::string& text);

/// A polynomial in the single variable `var`.
QPoly parse_univariate(const std::string& text, const std::string& var);

}  // namespace placeone
