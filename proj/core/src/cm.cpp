#include "gidlab/cm.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "gidlab/csv.hpp"

namespace gidlab {

GridReport cm_check(const std::function<double(double)>& f, double lambda_min,
                    double lambda_max, int points, int order) {
  if (!(lambda_min > 0) || !(lambda_min < lambda_max))
    throw std::invalid_argument("cm_check: need 0 < lambda_min < lambda_max");
  if (order < 2) throw std::invalid_argument("cm_check: order must be >= 2");
  if (points < order + 1) throw std::invalid_argument("cm_check: points must be >= order+1");

  GridReport rep;
  rep.grid = linear_grid(lambda_min, lambda_max, points);
  rep.values.resize(rep.grid.size());
  for (std::size_t i = 0; i < rep.grid.size(); ++i) {
    double v;
    try {
      v = f(rep.grid[i]);
    } catch (const std::exception& e) {
      throw std::runtime_error("cm_check: evaluation failed at grid index " +
                               std::to_string(i) + " (lambda=" + format_double_short(rep.grid[i]) +
                               "): " + e.what());
    }
    if (!std::isfinite(v))
      throw std::runtime_error("cm_check: non-finite value at grid index " + std::to_string(i) +
                               " (lambda=" + format_double_short(rep.grid[i]) + ")");
    rep.values[i] = v;
  }

  double maxabs = 0;
  for (double v : rep.values) maxabs = std::max(maxabs, std::abs(v));
  const double tau = 64.0 * std::numeric_limits<double>::epsilon() * maxabs *
                     std::ldexp(1.0, order);

  const std::size_t npts = rep.grid.size();
  rep.pass.assign(npts, 1);
  rep.worst_magnitude = std::numeric_limits<double>::infinity();
  std::vector<double> work = rep.values;
  int worst_order = 0;
  for (int k = 1; k <= order; ++k) {
    for (std::size_t i = 0; i + k < npts; ++i) work[i] = work[i + 1] - work[i];
    const bool odd = (k % 2) != 0;
    for (std::size_t i = 0; i + k < npts; ++i) {
      const double signed_diff = odd ? -work[i] : work[i];
      const double margin = signed_diff + tau;
      if (margin < rep.worst_magnitude) {
        rep.worst_magnitude = margin;
        rep.worst_index = i;
        worst_order = k;
      }
      if (margin < 0) rep.pass[i] = 0;
    }
  }
  rep.overall = rep.worst_magnitude >= 0;
  if (!rep.overall) {
    rep.note = "order " + std::to_string(worst_order) + " sign violation at lambda=" +
               format_double_short(rep.grid[rep.worst_index]) + " (margin " +
               format_double_short(rep.worst_magnitude) + ", tau " + format_double_short(tau) + ")";
  }
  return rep;
}

GridReport cm_check(const std::function<double(double)>& f, const CmGrid& grid) {
  return cm_check(f, grid.lambda_min, grid.lambda_max, grid.points, grid.order);
}

}  // namespace gidlab
