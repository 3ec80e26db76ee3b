#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gidlab {

/// Laplace exponent psi with psi(0)=0. Value object; cheap to copy.
///
/// The composite factories mirror the three subordination closed forms:
/// gamma time gives (1+psi)^t - 1, exponential time gives t*psi, and
/// Mittag-Leffler time gives psi^t. t outside (0,1] is accepted for
/// gamma/power composites so negative controls can be built; such exponents
/// generally fail the complete-monotonicity classifier, which is the point.
class PsiExponent {
 public:
  /// A * lambda^alpha, A > 0, alpha in (0,1].
  static PsiExponent power(double amplitude, double alpha);
  /// mu * lambda / (lambda + theta): compound Poisson with Exp(theta) jumps.
  static PsiExponent compound_poisson_exp(double mu, double theta);
  /// sum_k w_k * (1 - exp(-b_k * lambda)), all w_k, b_k > 0.
  static PsiExponent finite_mixture(std::vector<double> weights, std::vector<double> scales);
  /// lambda^alpha * (1 + eps*cos(2*pi*ln(lambda)/ln(1/b))).
  /// The log-periodic factor has period ln(1/b), so psi(b*lambda) = b^alpha * psi(lambda):
  /// a genuinely non-power exponent that is still invariant under one thinning scale.
  /// Construction runs the complete-monotonicity check on the analytic derivative
  /// and rejects (alpha, b, eps) combinations that break it.
  static PsiExponent semi_ml_perturbed(double alpha, double b, double eps);
  static PsiExponent gamma_subordinated(PsiExponent base, double t);  // (1+psi)^t - 1, t > 0
  static PsiExponent scaled(PsiExponent base, double t);              // t * psi, t >= 0
  static PsiExponent power_subordinated(PsiExponent base, double t);  // psi^t, t > 0

  double operator()(double lambda) const;
  const std::string& describe() const;

  /// Mixture weights/scales; empty vectors for non-mixture variants.
  const std::vector<double>& mixture_weights() const;
  const std::vector<double>& mixture_scales() const;

 private:
  struct Impl;
  explicit PsiExponent(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

double psi_eval(const PsiExponent& psi, double lambda);

/// sup over the grid of |psi(lambda) - (1/p)*psi(c*lambda)|. Zero identifies
/// exponents invariant under p-thinning combined with contraction by c.
double semi_ml_residual(const PsiExponent& psi, double p, double c,
                        const std::vector<double>& grid);

struct PowerLawFit {
  double amplitude = 0;
  double alpha = 0;
  double residual = 0;  // RMS misfit of ln(psi) against ln(A) + alpha*ln(lambda)
};

/// Least-squares fit of ln(values) = ln(A) + alpha*ln(grid).
PowerLawFit fit_power_law(const std::vector<double>& grid, const std::vector<double>& values);
PowerLawFit fit_power_law(const PsiExponent& psi, const std::vector<double>& grid);

}  // namespace gidlab
