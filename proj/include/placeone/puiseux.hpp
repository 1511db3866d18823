#pragma once

// Rational Newton-Puiseux expansions under dynamic evaluation.
//
// Everything here works at the origin of the local frame. Functions taking a
// tower may throw a SplitEvent for any level of that tower when the branch
// structure is not uniform over its points; levels they adjoin themselves are
// handled internally.

#include <vector>

#include "placeone/tower.hpp"

namespace placeone {

/// One place of a germ, parametrized by x = X(t), y = Y(t) in the original
/// local frame, both known modulo t^truncation.
struct Branch {
  TowerPtr host;
  int e = 1;  // ramification over the sheared x-axis
  UPoly<Alg> x_series, y_series;
  int truncation = 0;
};

/// Branch count r at the origin, per point of t. Requires H(0,0) = 0 and H reduced.
int count_branches(const TowerPtr& t, const BiPoly<Alg>& H);

/// All branches at the origin over descendants of t. The weight of a branch
/// (number of geometric places it stands for, per point of t) is
/// host->degree() / t->degree().
std::vector<Branch> puiseux_branches(const TowerPtr& t, const BiPoly<Alg>& H, int truncation);

/// Sum over the branches of H at the origin of ord_t G(X(t), Y(t)), per point
/// of t. Truncation starts at trunc_start and doubles until every order is certified.
int branch_ord_sum(const TowerPtr& t, const BiPoly<Alg>& H, const BiPoly<Alg>& G, int trunc_start);

/// Order of vanishing of H at the origin under dynamic evaluation (-1 for H = 0).
int order_d5(const BiPoly<Alg>& H);

}  // namespace placeone
