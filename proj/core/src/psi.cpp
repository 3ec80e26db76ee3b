#include "gidlab/psi.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "gidlab/cm.hpp"
#include "gidlab/csv.hpp"

namespace gidlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_eval_domain(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0)
    throw std::domain_error("psi_eval: lambda must be finite and nonnegative");
}

const std::vector<double>& empty_vec() {
  static const std::vector<double> v;
  return v;
}

}  // namespace

struct PsiExponent::Impl {
  std::function<double(double)> eval;
  std::string name;
  std::vector<double> weights;  // finite_mixture only
  std::vector<double> scales;   // finite_mixture only
};

PsiExponent::PsiExponent(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

double PsiExponent::operator()(double lambda) const {
  require_eval_domain(lambda);
  if (lambda == 0) return 0.0;  // exact for every variant
  return impl_->eval(lambda);
}

const std::string& PsiExponent::describe() const { return impl_->name; }

const std::vector<double>& PsiExponent::mixture_weights() const {
  return impl_ ? impl_->weights : empty_vec();
}

const std::vector<double>& PsiExponent::mixture_scales() const {
  return impl_ ? impl_->scales : empty_vec();
}

PsiExponent PsiExponent::power(double amplitude, double alpha) {
  if (!(amplitude > 0) || !std::isfinite(amplitude))
    throw std::invalid_argument("power: amplitude must be positive");
  if (!(alpha > 0) || !(alpha <= 1))
    throw std::invalid_argument("power: alpha must be in (0,1]");
  auto impl = std::make_shared<Impl>();
  impl->eval = [amplitude, alpha](double l) { return amplitude * std::pow(l, alpha); };
  impl->name = "power(A=" + format_double_short(amplitude) +
               ",alpha=" + format_double_short(alpha) + ")";
  return PsiExponent(std::move(impl));
}

PsiExponent PsiExponent::compound_poisson_exp(double mu, double theta) {
  if (!(mu > 0) || !(theta > 0))
    throw std::invalid_argument("compound_poisson_exp: mu and theta must be positive");
  auto impl = std::make_shared<Impl>();
  impl->eval = [mu, theta](double l) { return mu * l / (l + theta); };
  impl->name = "compound-exp(mu=" + format_double_short(mu) +
               ",theta=" + format_double_short(theta) + ")";
  return PsiExponent(std::move(impl));
}

PsiExponent PsiExponent::finite_mixture(std::vector<double> weights, std::vector<double> scales) {
  if (weights.empty() || weights.size() != scales.size())
    throw std::invalid_argument("finite_mixture: need equal, nonempty weight/scale lists");
  for (double w : weights)
    if (!(w > 0) || !std::isfinite(w))
      throw std::invalid_argument("finite_mixture: weights must be positive");
  for (double b : scales)
    if (!(b > 0) || !std::isfinite(b))
      throw std::invalid_argument("finite_mixture: scales must be positive");
  auto impl = std::make_shared<Impl>();
  impl->weights = weights;
  impl->scales = scales;
  std::string name = "mixture(w=[";
  for (std::size_t i = 0; i < weights.size(); ++i)
    name += (i ? "," : "") + format_double_short(weights[i]);
  name += "],b=[";
  for (std::size_t i = 0; i < scales.size(); ++i)
    name += (i ? "," : "") + format_double_short(scales[i]);
  name += "])";
  impl->name = std::move(name);
  impl->eval = [w = std::move(weights), b = std::move(scales)](double l) {
    double acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * -std::expm1(-b[i] * l);
    return acc;
  };
  return PsiExponent(std::move(impl));
}

PsiExponent PsiExponent::semi_ml_perturbed(double alpha, double b, double eps) {
  if (!(alpha > 0) || !(alpha < 1))
    throw std::invalid_argument("semi_ml_perturbed: alpha must be in (0,1)");
  if (!(b > 0) || !(b < 1)) throw std::invalid_argument("semi_ml_perturbed: b must be in (0,1)");
  if (!(std::abs(eps) < 1))
    throw std::invalid_argument("semi_ml_perturbed: |eps| must be < 1");
  const double omega = kTwoPi / std::log(1.0 / b);
  // Admissibility: the analytic derivative
  //   psi'(l) = l^(alpha-1) * (alpha + eps*(alpha*cos(omega*ln l) - omega*sin(omega*ln l)))
  // must itself pass the numerical CM check; large eps or fast log-frequency
  // omega (b near 1) flips a difference sign somewhere and is rejected here.
  auto deriv = [alpha, eps, omega](double l) {
    const double u = omega * std::log(l);
    return std::pow(l, alpha - 1.0) *
           (alpha + eps * (alpha * std::cos(u) - omega * std::sin(u)));
  };
  GridReport check = cm_check(deriv, CmGrid{});
  if (!check.overall)
    throw std::invalid_argument(
        "semi_ml_perturbed: derivative fails the complete-monotonicity check (" + check.note +
        "); reduce |eps| or b");
  auto impl = std::make_shared<Impl>();
  impl->eval = [alpha, eps, omega](double l) {
    return std::pow(l, alpha) * (1.0 + eps * std::cos(omega * std::log(l)));
  };
  impl->name = "semi-ml(alpha=" + format_double_short(alpha) + ",b=" + format_double_short(b) +
               ",eps=" + format_double_short(eps) + ")";
  return PsiExponent(std::move(impl));
}

PsiExponent PsiExponent::gamma_subordinated(PsiExponent base, double t) {
  if (!(t > 0) || !std::isfinite(t))
    throw std::invalid_argument("gamma_subordinated: t must be positive");
  auto impl = std::make_shared<Impl>();
  impl->name = "gamma-subordinated(t=" + format_double_short(t) + ";" + base.describe() + ")";
  if (t == 1.0)
    impl->eval = [base](double l) { return base(l); };
  else
    impl->eval = [base, t](double l) { return std::expm1(t * std::log1p(base(l))); };
  return PsiExponent(std::move(impl));
}

PsiExponent PsiExponent::scaled(PsiExponent base, double t) {
  if (!(t >= 0) || !std::isfinite(t))
    throw std::invalid_argument("scaled: t must be nonnegative");
  auto impl = std::make_shared<Impl>();
  impl->name = "scaled(t=" + format_double_short(t) + ";" + base.describe() + ")";
  impl->eval = [base, t](double l) { return t * base(l); };
  return PsiExponent(std::move(impl));
}

PsiExponent PsiExponent::power_subordinated(PsiExponent base, double t) {
  if (!(t > 0) || !std::isfinite(t))
    throw std::invalid_argument("power_subordinated: t must be positive");
  auto impl = std::make_shared<Impl>();
  impl->name = "power-subordinated(t=" + format_double_short(t) + ";" + base.describe() + ")";
  if (t == 1.0)
    impl->eval = [base](double l) { return base(l); };
  else
    impl->eval = [base, t](double l) { return std::pow(base(l), t); };
  return PsiExponent(std::move(impl));
}

double psi_eval(const PsiExponent& psi, double lambda) { return psi(lambda); }

double semi_ml_residual(const PsiExponent& psi, double p, double c,
                        const std::vector<double>& grid) {
  if (!(p > 0) || !(p < 1)) throw std::invalid_argument("semi_ml_residual: p must be in (0,1)");
  if (!(c > 0) || !(c < 1)) throw std::invalid_argument("semi_ml_residual: c must be in (0,1)");
  double sup = 0;
  for (double l : grid) sup = std::max(sup, std::abs(psi(l) - psi(c * l) / p));
  return sup;
}

PowerLawFit fit_power_law(const std::vector<double>& grid, const std::vector<double>& values) {
  if (grid.size() != values.size() || grid.size() < 2)
    throw std::invalid_argument("fit_power_law: need matching grids with >= 2 points");
  const std::size_t n = grid.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(grid[i] > 0)) throw std::domain_error("fit_power_law: grid must be positive");
    if (!(values[i] > 0)) throw std::domain_error("fit_power_law: values must be positive");
    lx[i] = std::log(grid[i]);
    ly[i] = std::log(values[i]);
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  if (denom == 0) throw std::domain_error("fit_power_law: degenerate grid");
  PowerLawFit fit;
  fit.alpha = (dn * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.alpha * sx) / dn;
  fit.amplitude = std::exp(intercept);
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (intercept + fit.alpha * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / dn);
  return fit;
}

PowerLawFit fit_power_law(const PsiExponent& psi, const std::vector<double>& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = psi(grid[i]);
  return fit_power_law(grid, values);
}

}  // namespace gidlab
