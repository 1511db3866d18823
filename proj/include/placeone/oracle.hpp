#pragma once

// Brute-force quotient dimensions by exact linear algebra. Slow on purpose:
// they share no code path with the resultant and Puiseux routes and serve as
// independent checks of them.

#include "placeone/qpoly.hpp"

namespace placeone {

/// dim_Q Q[x,y]/(f, g) for f monic in y: the degree of the determinant of
/// multiplication by g on Q[x][y]/(f), found by evaluation and interpolation.
int quotient_dim_global(const QBiPoly& f, const QBiPoly& g);

/// dim of the local ring quotient at (a, b): Macaulay truncations at total
/// degree D = 4, 8, 16, ... until the dimension agrees with the previous
/// cap or with D + 1.
/// Throws ResourceCapError past D = max_cap.
int quotient_dim_local(const QBiPoly& f, const QBiPoly& g, const Rational& a, const Rational& b, int max_cap = 128);

/// The dimension at a single truncation degree D.
int truncated_quotient_dim(const QBiPoly& f, const QBiPoly& g, int D);

}  // namespace placeone
