#include "gidlab/nnls.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gidlab {

std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& y) {
  const std::size_t m = y.size();
  const std::size_t p = columns.size();
  if (p == 0) throw std::invalid_argument("least_squares: no columns");
  if (p > m) throw std::invalid_argument("least_squares: more columns than rows");
  for (const auto& c : columns)
    if (c.size() != m) throw std::invalid_argument("least_squares: column length mismatch");

  // column-major working copies; R overwrites A, Q' applied to rhs on the fly
  std::vector<std::vector<double>> a = columns;
  std::vector<double> rhs = y;
  for (std::size_t j = 0; j < p; ++j) {
    // Householder vector for column j below row j
    double norm = 0;
    for (std::size_t i = j; i < m; ++i) norm += a[j][i] * a[j][i];
    norm = std::sqrt(norm);
    if (norm == 0) throw std::runtime_error("least_squares: rank-deficient system");
    double head = a[j][j];
    const double alpha = head >= 0 ? -norm : norm;
    std::vector<double> v(m - j);
    v[0] = head - alpha;
    for (std::size_t i = j + 1; i < m; ++i) v[i - j] = a[j][i];
    double vv = 0;
    for (double x : v) vv += x * x;
    if (vv == 0) continue;  // already triangular in this column
    a[j][j] = alpha;
    for (std::size_t i = j + 1; i < m; ++i) a[j][i] = 0;
    for (std::size_t k = j + 1; k < p; ++k) {
      double dot = 0;
      for (std::size_t i = j; i < m; ++i) dot += v[i - j] * a[k][i];
      const double f = 2.0 * dot / vv;
      for (std::size_t i = j; i < m; ++i) a[k][i] -= f * v[i - j];
    }
    double dot = 0;
    for (std::size_t i = j; i < m; ++i) dot += v[i - j] * rhs[i];
    const double f = 2.0 * dot / vv;
    for (std::size_t i = j; i < m; ++i) rhs[i] -= f * v[i - j];
  }
  // back substitution on the p x p triangle
  std::vector<double> x(p);
  for (std::size_t jj = p; jj-- > 0;) {
    double acc = rhs[jj];
    for (std::size_t k = jj + 1; k < p; ++k) acc -= a[k][jj] * x[k];
    const double diag = a[jj][jj];
    if (diag == 0) throw std::runtime_error("least_squares: singular triangular factor");
    x[jj] = acc / diag;
  }
  return x;
}

std::vector<double> nnls(const std::vector<std::vector<double>>& columns,
                         const std::vector<double>& y, std::size_t max_iter) {
  const std::size_t m = y.size();
  const std::size_t p = columns.size();
  if (p == 0) throw std::invalid_argument("nnls: no columns");
  for (const auto& c : columns)
    if (c.size() != m) throw std::invalid_argument("nnls: column length mismatch");

  std::vector<double> x(p, 0.0);
  std::vector<bool> passive(p, false);
  std::vector<double> resid = y;  // y - A x

  auto gradient = [&](std::size_t j) {
    double g = 0;
    for (std::size_t i = 0; i < m; ++i) g += columns[j][i] * resid[i];
    return g;
  };
  double gscale = 0;
  for (std::size_t j = 0; j < p; ++j) gscale = std::max(gscale, std::abs(gradient(j)));
  const double tol = 1e-12 * std::max(gscale, 1.0);

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    // most positive gradient among the clamped variables
    double best = tol;
    std::size_t enter = p;
    for (std::size_t j = 0; j < p; ++j) {
      if (passive[j]) continue;
      const double g = gradient(j);
      if (g > best) {
        best = g;
        enter = j;
      }
    }
    if (enter == p) break;  // KKT satisfied
    passive[enter] = true;

    for (;;) {
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < p; ++j)
        if (passive[j]) idx.push_back(j);
      std::vector<std::vector<double>> sub;
      sub.reserve(idx.size());
      for (std::size_t j : idx) sub.push_back(columns[j]);
      std::vector<double> z = least_squares(sub, y);
      bool feasible = true;
      for (double v : z)
        if (!(v > 0)) {
          feasible = false;
          break;
        }
      if (feasible) {
        for (double& v : x) v = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) x[idx[k]] = z[k];
        break;
      }
      // step back to the feasibility boundary and drop clamped variables
      double step = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (z[k] > 0) continue;
        const double xk = x[idx[k]];
        const double denom = xk - z[k];
        if (denom > 0) step = std::min(step, xk / denom);
      }
      if (!std::isfinite(step)) {
        // entering variable was immediately infeasible; clamp it and stop
        passive[enter] = false;
        break;
      }
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const std::size_t j = idx[k];
        x[j] += step * (z[k] - x[j]);
        if (x[j] <= 1e-14 * std::abs(z[k]) || x[j] <= 0) {
          x[j] = 0;
          passive[j] = false;
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      double ax = 0;
      for (std::size_t j = 0; j < p; ++j)
        if (x[j] != 0) ax += columns[j][i] * x[j];
      resid[i] = y[i] - ax;
    }
  }
  return x;
}

}  // namespace gidlab
