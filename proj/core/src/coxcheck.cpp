#include "gidlab/coxcheck.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gidlab/csv.hpp"
#include "gidlab/nnls.hpp"
#include "gidlab/samplers.hpp"

namespace gidlab {

std::vector<double> default_p_grid() {
  return {0.05, 0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95};
}

std::string CoxVerdict::csv() const {
  std::ostringstream os;
  os << "p,verdict,worst_lambda,worst_margin\n";
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    os << format_double(p_grid[i]) << ',' << (p_pass[i] ? "PASS" : "FAIL") << ','
       << format_double(p_worst_lambda[i]) << ',' << format_double(p_worst_margin[i]) << '\n';
  }
  return os.str();
}

void CoxVerdict::write_csv_file(const std::string& path) const {
  write_text_file(path, csv());
}

CoxVerdict cox_renewal_check(const LaplaceTransformSpec& g, const std::vector<double>& p_grid,
                             const CmGrid& grid) {
  if (p_grid.empty()) throw std::invalid_argument("cox_renewal_check: empty p grid");
  CoxVerdict verdict;
  verdict.p_grid = p_grid;
  verdict.worst_margin = std::numeric_limits<double>::infinity();
  for (double p : p_grid) {
    if (!(p > 0) || !(p < 1))
      throw std::invalid_argument("cox_renewal_check: p values must be in (0,1)");
    LaplaceTransformSpec phi = p_inverse(g, p);
    GridReport rep = cm_check([&phi](double l) { return phi(l); }, grid);
    verdict.p_pass.push_back(rep.overall ? 1 : 0);
    verdict.p_worst_lambda.push_back(rep.grid[rep.worst_index]);
    verdict.p_worst_margin.push_back(rep.worst_magnitude);
    if (!rep.overall) verdict.phi_pass = false;
    if (rep.worst_magnitude < verdict.worst_margin) {
      verdict.worst_margin = rep.worst_magnitude;
      verdict.worst_lambda = rep.grid[rep.worst_index];
      verdict.worst_p = p;
    }
  }
  GridReport gid = gid_check(g, grid);
  verdict.gid_pass = gid.overall;
  verdict.overall = verdict.phi_pass && verdict.gid_pass;
  verdict.note = "g=" + g.describe();
  if (!verdict.phi_pass) verdict.note += "; p-inverse CM violation";
  if (!verdict.gid_pass) verdict.note += "; gid violation (" + gid.note + ")";
  return verdict;
}

double thinning_limit_lt(const PsiExponent& psi, std::uint64_t n, double lambda) {
  if (n == 0) throw std::invalid_argument("thinning_limit_lt: n must be >= 1");
  const double nn = static_cast<double>(n);
  return 1.0 / (1.0 + nn * std::expm1(psi(lambda) / nn));
}

ThinningLimitReport verify_thinning_limit(const PsiExponent& psi,
                                          const std::vector<double>& lambda_grid,
                                          const std::vector<std::uint64_t>& n_schedule) {
  if (lambda_grid.empty()) throw std::invalid_argument("verify_thinning_limit: empty grid");
  if (n_schedule.size() < 2)
    throw std::invalid_argument("verify_thinning_limit: need at least 2 schedule entries");
  for (std::size_t i = 1; i < n_schedule.size(); ++i)
    if (n_schedule[i] <= n_schedule[i - 1])
      throw std::invalid_argument("verify_thinning_limit: n_schedule must be ascending");

  ThinningLimitReport rep;
  rep.n_schedule = n_schedule;
  for (std::uint64_t n : n_schedule) {
    double sup = 0;
    for (double l : lambda_grid) {
      const double target = 1.0 / (1.0 + psi(l));
      sup = std::max(sup, std::abs(thinning_limit_lt(psi, n, l) - target));
    }
    rep.sup_errors.push_back(sup);
  }
  // order from the log-log slope of sup-error against n
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(n_schedule.size());
  for (std::size_t i = 0; i < n_schedule.size(); ++i) {
    const double x = std::log(static_cast<double>(n_schedule[i]));
    const double y = std::log(std::max(rep.sup_errors[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.fitted_order = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
  rep.final_sup = rep.sup_errors.back();
  rep.pass = rep.final_sup < 1e-3 && rep.fitted_order >= 0.9;
  rep.note = "psi=" + psi.describe() + " final_sup=" + format_double_short(rep.final_sup) +
             " order=" + format_double_short(rep.fitted_order);
  return rep;
}

GridReport geometric_sum_limit_demo(double alpha, std::uint64_t n, std::uint64_t m,
                                    std::uint64_t seed, unsigned workers,
                                    std::vector<double> lambda_grid, double k_sigma) {
  if (!(alpha > 0) || !(alpha <= 1))
    throw std::invalid_argument("geometric_sum_limit_demo: alpha must be in (0,1]");
  if (n == 0 || m == 0) throw std::invalid_argument("geometric_sum_limit_demo: n, m must be >= 1");
  const double p = 1.0 / static_cast<double>(n);
  const double summand_scale = std::pow(static_cast<double>(n), -1.0 / alpha);
  std::string desc = "geom-stable-sum(alpha=" + format_double_short(alpha) +
                     ",n=" + format_u64(n) + ")";
  SampleBatch batch =
      generate_batch(m, seed, workers, std::move(desc), [alpha, p, summand_scale](Rng& rng) {
        const std::uint64_t count = draw_geometric(rng, p);
        double acc = 0;
        for (std::uint64_t j = 0; j < count; ++j)
          acc += summand_scale * draw_positive_stable(rng, alpha);
        return acc;
      });
  LaplaceTransformSpec limit = LaplaceTransformSpec::mittag_leffler(alpha, 1.0);
  GridReport rep = compare_lt(
      batch, [&limit](double l) { return limit(l); }, lambda_grid, k_sigma);
  rep.note = "n=" + format_u64(n) + " m=" + format_u64(m) + " " + rep.note;
  return rep;
}

DiscretizeResult discretize_psi(const PsiExponent& psi, int k, double lambda_max) {
  if (k < 1) throw std::invalid_argument("discretize_psi: k must be >= 1");
  if (!(lambda_max > 0) || !std::isfinite(lambda_max))
    throw std::invalid_argument("discretize_psi: lambda_max must be positive");

  const std::vector<double> grid = log_grid(lambda_max * 1e-3, lambda_max, 64);
  std::vector<double> target(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) target[i] = psi(grid[i]);

  // candidate decay scales: nested log-spaced set over three decades above
  // 1/lambda_max, so doubling k refines (never replaces) the dictionary
  std::vector<double> candidates(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j)
    candidates[static_cast<std::size_t>(j - 1)] =
        (1.0 / lambda_max) * std::pow(1000.0, static_cast<double>(j) / k);

  std::vector<std::vector<double>> columns(candidates.size());
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    columns[j].resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      columns[j][i] = -std::expm1(-candidates[j] * grid[i]);
  }

  std::vector<double> coeff = nnls(columns, target);

  DiscretizeResult out{PsiExponent::power(1, 1), {}, {}, 0};
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    if (coeff[j] > 0) {
      out.weights.push_back(coeff[j]);
      out.scales.push_back(candidates[j]);
    }
  }
  double ss = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double fit = 0;
    for (std::size_t j = 0; j < coeff.size(); ++j)
      if (coeff[j] > 0) fit += coeff[j] * columns[j][i];
    const double r = fit - target[i];
    ss += r * r;
  }
  out.residual = std::sqrt(ss / static_cast<double>(grid.size()));
  if (out.weights.empty())
    throw std::runtime_error("discretize_psi: fit produced no positive terms (residual " +
                             format_double_short(out.residual) + ")");
  out.mixture = PsiExponent::finite_mixture(out.weights, out.scales);
  return out;
}

}  // namespace gidlab
