#include "gidlab/renewal.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gidlab/csv.hpp"
#include "gidlab/stats.hpp"

namespace gidlab {

std::string EpochSequence::csv() const {
  std::ostringstream os;
  os << "# horizon=" << format_double_short(horizon) << " seed=" << format_u64(seed) << '\n';
  os << "epoch\n";
  for (double t : epochs) os << format_double(t) << '\n';
  return os.str();
}

void EpochSequence::write_csv_file(const std::string& path) const {
  write_text_file(path, csv());
}

EpochSequence simulate_renewal(const Family& inter, double horizon, std::uint64_t seed) {
  if (!(horizon > 0) || !std::isfinite(horizon))
    throw std::invalid_argument("simulate_renewal: horizon must be positive and finite");
  EpochSequence out;
  out.horizon = horizon;
  out.seed = seed;
  Rng rng(seed, 0);
  double t = 0;
  double prev = 0;
  for (;;) {
    t += inter.draw(rng);
    if (t <= prev) t = std::nextafter(prev, std::numeric_limits<double>::infinity());
    if (t > horizon) break;
    out.epochs.push_back(t);
    prev = t;
    if (out.epochs.size() >= 1000000 && t < 0.01 * horizon)
      throw std::runtime_error(
          "simulate_renewal: degenerate inter-arrival sampler (1e6 epochs before 1% of horizon)");
  }
  return out;
}

EpochSequence thin(const EpochSequence& e, double p, std::uint64_t seed) {
  if (!(p > 0) || !(p <= 1)) throw std::invalid_argument("thin: p must be in (0,1]");
  EpochSequence out;
  out.horizon = e.horizon;
  out.seed = seed;
  Rng rng(seed, 0);
  for (double t : e.epochs)
    if (rng.next_double() < p) out.epochs.push_back(t);
  return out;
}

EpochSequence contract(const EpochSequence& e, double c) {
  if (!(c > 0) || !(c <= 1)) throw std::invalid_argument("contract: c must be in (0,1]");
  EpochSequence out;
  out.horizon = c * e.horizon;
  out.seed = e.seed;
  out.epochs.reserve(e.epochs.size());
  double prev = 0;
  for (double t : e.epochs) {
    double s = c * t;
    if (s <= prev && !out.epochs.empty())
      s = std::nextafter(prev, std::numeric_limits<double>::infinity());
    out.epochs.push_back(s);
    prev = s;
  }
  return out;
}

SampleBatch interarrivals(const EpochSequence& e) {
  if (e.epochs.size() < 2)
    throw std::runtime_error("interarrivals: need at least 2 epochs");
  SampleBatch out;
  out.seed = e.seed;
  out.descriptor = "interarrivals(n=" + format_u64(e.epochs.size()) + ")";
  out.values.resize(e.epochs.size());
  out.values[0] = e.epochs[0];
  for (std::size_t i = 1; i < e.epochs.size(); ++i)
    out.values[i] = e.epochs[i] - e.epochs[i - 1];
  return out;
}

InvarianceReport verify_thinning_invariance(InvarianceFamily family, double param, double p,
                                            std::uint64_t n_target, std::uint64_t seed,
                                            double c_override, double level) {
  if (!(p > 0) || !(p < 1))
    throw std::invalid_argument("verify_thinning_invariance: p must be in (0,1)");
  if (n_target < 16)
    throw std::invalid_argument("verify_thinning_invariance: n_target too small");

  Family inter = Family::exponential(1);
  double horizon = 0;
  double alpha = 1;
  switch (family) {
    case InvarianceFamily::poisson:
      if (!(param > 0)) throw std::invalid_argument("verify_thinning_invariance: rate must be > 0");
      inter = Family::exponential(param);
      horizon = static_cast<double>(n_target) / param;
      alpha = 1;
      break;
    case InvarianceFamily::mittag_leffler:
      if (!(param > 0) || !(param <= 1))
        throw std::invalid_argument("verify_thinning_invariance: alpha must be in (0,1]");
      inter = Family::mittag_leffler(param, 1);
      alpha = param;
      // mean epoch count over [0,T] grows like T^alpha/Gamma(1+alpha)
      horizon = std::pow(static_cast<double>(n_target) * std::tgamma(1.0 + param), 1.0 / param);
      break;
  }

  InvarianceReport rep;
  rep.p = p;
  rep.c = c_override != 0 ? c_override : std::pow(p, 1.0 / alpha);
  if (!(rep.c > 0) || !(rep.c <= 1))
    throw std::invalid_argument("verify_thinning_invariance: contraction factor out of (0,1]");

  EpochSequence original = simulate_renewal(inter, horizon, derive_seed(seed, 0));
  rep.original = original.epochs.size();
  EpochSequence kept = thin(original, p, derive_seed(seed, 1));
  rep.kept = kept.epochs.size();
  if (kept.epochs.size() < 2)
    throw std::runtime_error("verify_thinning_invariance: too few epochs survive thinning");
  EpochSequence rescaled = contract(kept, rep.c);
  SampleBatch gaps = interarrivals(rescaled);
  SampleBatch fresh = sample_family(inter, gaps.n(), derive_seed(seed, 2));

  KsResult ks = ks_two_sample(gaps, fresh, level);
  rep.d = ks.statistic;
  rep.threshold = ks.threshold;
  rep.pass = ks.pass;
  rep.note = "family=" + inter.describe() + " p=" + format_double_short(p) +
             " c=" + format_double_short(rep.c) + " kept=" + format_u64(rep.kept);
  return rep;
}

}  // namespace gidlab
