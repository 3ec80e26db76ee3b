#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gidlab/cm.hpp"
#include "gidlab/grid.hpp"
#include "gidlab/laplace.hpp"
#include "gidlab/psi.hpp"

namespace gidlab {

/// p values spanning the small-p region (where inverse-thinning violations
/// surface first) through near-1.
std::vector<double> default_p_grid();

/// Verdict of the Cox-and-renewal criterion: g admits a p-thinning
/// pre-image for every probed p iff every p-inverse transform is completely
/// monotone; combined with the direct geometric-infinite-divisibility check
/// of g itself, which the criterion says must agree.
struct CoxVerdict {
  std::vector<double> p_grid;
  std::vector<char> p_pass;
  std::vector<double> p_worst_lambda;
  std::vector<double> p_worst_margin;  // smallest signed margin; negative = violation
  bool phi_pass = true;                // all per-p checks
  bool gid_pass = true;                // gid_check of g
  bool overall = true;
  double worst_p = 0;
  double worst_lambda = 0;
  double worst_margin = 0;
  std::string note;

  /// CSV schema: p,verdict,worst_lambda,worst_margin (one row per p).
  std::string csv() const;
  void write_csv_file(const std::string& path) const;
};

CoxVerdict cox_renewal_check(const LaplaceTransformSpec& g, const std::vector<double>& p_grid,
                             const CmGrid& grid = {});

/// Transform of the inter-arrivals of a (1/n)-thinned renewal process whose
/// original inter-arrival transform is exp(-psi):
///   (1/n) e^(-psi/n) / (1 - (1-1/n) e^(-psi/n)),
/// evaluated in the cancellation-free form 1/(1 + n*expm1(psi/n)).
double thinning_limit_lt(const PsiExponent& psi, std::uint64_t n, double lambda);

struct ThinningLimitReport {
  std::vector<std::uint64_t> n_schedule;
  std::vector<double> sup_errors;  // sup over grid of |limit_lt - 1/(1+psi)|
  double fitted_order = 0;         // log-log regression slope magnitude
  double final_sup = 0;
  bool pass = false;
  std::string note;
};

/// Checks convergence of the thinning transform to 1/(1+psi): PASS iff the
/// final sup-error is below 1e-3 and the fitted order is at least 0.9.
ThinningLimitReport verify_thinning_limit(const PsiExponent& psi,
                                          const std::vector<double>& lambda_grid,
                                          const std::vector<std::uint64_t>& n_schedule);

/// Simulates m draws of sum_{j=1}^{N} X_j with N geometric(1/n) and
/// X_j = n^(-1/alpha) * S_alpha, and compares the empirical transform with
/// the Mittag-Leffler limit 1/(1+lambda^alpha) within k_sigma*se.
GridReport geometric_sum_limit_demo(double alpha, std::uint64_t n, std::uint64_t m,
                                    std::uint64_t seed, unsigned workers = 1,
                                    std::vector<double> lambda_grid = {0.5, 1.0, 2.0},
                                    double k_sigma = 4.0);

struct DiscretizeResult {
  PsiExponent mixture;           // finite_mixture variant
  std::vector<double> weights;   // c_j > 0 kept by the fit
  std::vector<double> scales;    // matching b_j
  double residual = 0;           // RMS of (mixture - psi) on the fit grid
};

/// Nonnegative least-squares fit of sum c_j (1 - exp(-b_j lambda)) to psi
/// with k log-spaced candidate scales; candidate sets are nested as k
/// doubles, so the fit residual cannot increase with k.
DiscretizeResult discretize_psi(const PsiExponent& psi, int k, double lambda_max);

}  // namespace gidlab
