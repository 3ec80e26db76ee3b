#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gidlab/batch.hpp"
#include "gidlab/cm.hpp"
#include "gidlab/grid.hpp"
#include "gidlab/psi.hpp"

namespace gidlab {

/// Evaluable Laplace transform g with g(0)=1 (exact for every variant,
/// including the empirical one). Value object; cheap to copy.
class LaplaceTransformSpec {
 public:
  static LaplaceTransformSpec exponential(double rate);            // rate/(rate+lambda)
  static LaplaceTransformSpec gamma(double shape, double rate);    // (rate/(rate+lambda))^shape
  static LaplaceTransformSpec mittag_leffler(double alpha, double scale);  // 1/(1+(scale*l)^alpha)
  static LaplaceTransformSpec gid(PsiExponent psi);                // 1/(1+psi)
  static LaplaceTransformSpec empirical(SampleBatch sample);       // mean of exp(-lambda*x_i)

  double operator()(double lambda) const;
  const std::string& describe() const;

 private:
  struct Impl;
  explicit LaplaceTransformSpec(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
  friend LaplaceTransformSpec geometric_convolve(const LaplaceTransformSpec&, double);
  friend LaplaceTransformSpec p_inverse(const LaplaceTransformSpec&, double);
};

/// Transform of the geometric(p) compound: p*phi/(1-(1-p)*phi). p=1 is the identity.
LaplaceTransformSpec geometric_convolve(const LaplaceTransformSpec& phi, double p);

/// The inverse map phi_p = g/(p+(1-p)*g). Note the result may fail to be a
/// valid transform; validity is decided by cm_check, not here.
LaplaceTransformSpec p_inverse(const LaplaceTransformSpec& g, double p);

double lt_eval(const LaplaceTransformSpec& g, double lambda);

/// Empirical transform with per-point standard errors sqrt(var_hat/n).
GridReport empirical_lt(const SampleBatch& sample, const std::vector<double>& grid);

struct SupDistance {
  double value = 0;
  double at_lambda = 0;
  std::size_t index = 0;
};

SupDistance lt_sup_distance(const LaplaceTransformSpec& a, const LaplaceTransformSpec& b,
                            const std::vector<double>& grid);
SupDistance lt_sup_distance(const GridReport& a, const GridReport& b);
SupDistance lt_sup_distance(const GridReport& a, const LaplaceTransformSpec& b);

/// Empirical-vs-reference comparison: pass at a point iff
/// |empirical - reference| <= k_sigma * se. Points with zero se must match exactly.
GridReport compare_lt(const SampleBatch& sample, const std::function<double(double)>& reference,
                      const std::vector<double>& grid, double k_sigma = 4.0);

/// Geometric-infinite-divisibility check via the Bernstein-type criterion:
/// psi = 1/g - 1 must vanish at 0 (probed by a shrinking-lambda refinement)
/// and its central-difference derivative proxy must pass cm_check at
/// grid.order - 1. Intended for closed-form transforms; empirical transforms
/// carry Monte Carlo noise far above the difference tolerance.
GridReport gid_check(const LaplaceTransformSpec& g, const CmGrid& grid = {});

}  // namespace gidlab
