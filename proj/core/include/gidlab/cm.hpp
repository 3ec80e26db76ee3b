#pragma once

#include <functional>

#include "gidlab/grid.hpp"

namespace gidlab {

/// Default window and difference order for monotonicity checking.
struct CmGrid {
  double lambda_min = 1e-2;
  double lambda_max = 10.0;
  int points = 64;
  int order = 6;
};

/// Numerical complete-monotonicity check: on a uniform grid with step h,
/// verifies (-1)^k (forward difference of order k) >= -tau for every order
/// k <= order and every admissible grid point. tau = 64*eps*max|f|*2^order
/// absorbs the rounding amplification of repeated differencing.
///
/// The report carries f's grid values; pass[i] refers to differences whose
/// leftmost stencil point is grid[i]; worst_magnitude is the smallest
/// (signed difference + tau) margin over all orders and points, so a
/// negative value is a violation.
GridReport cm_check(const std::function<double(double)>& f, double lambda_min,
                    double lambda_max, int points, int order);
GridReport cm_check(const std::function<double(double)>& f, const CmGrid& grid = {});

}  // namespace gidlab
