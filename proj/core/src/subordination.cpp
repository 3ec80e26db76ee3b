#include "gidlab/subordination.hpp"

#include <cmath>
#include <stdexcept>

#include "gidlab/csv.hpp"
#include "gidlab/samplers.hpp"

namespace gidlab {

BaseProcess::BaseProcess(Kind k, double a, double b, PsiExponent psi, std::string d)
    : kind_(k), a_(a), b_(b), psi_(std::move(psi)), desc_(std::move(d)) {}

BaseProcess BaseProcess::stable(double alpha) {
  if (!(alpha > 0) || !(alpha < 1))
    throw std::invalid_argument("BaseProcess::stable: alpha must be in (0,1)");
  return BaseProcess(Kind::stable, alpha, 0, PsiExponent::power(1, alpha),
                     "stable(alpha=" + format_double_short(alpha) + ")");
}

BaseProcess BaseProcess::compound_poisson_exp(double mu, double theta) {
  if (!(mu > 0) || !(theta > 0))
    throw std::invalid_argument("BaseProcess::compound_poisson_exp: mu, theta must be positive");
  return BaseProcess(Kind::compound_poisson_exp, mu, theta,
                     PsiExponent::compound_poisson_exp(mu, theta),
                     "cpe(mu=" + format_double_short(mu) + ",theta=" + format_double_short(theta) + ")");
}

double BaseProcess::draw_increment(Rng& rng, double s) const {
  if (!(s >= 0) || !std::isfinite(s))
    throw std::invalid_argument("draw_increment: s must be nonnegative and finite");
  switch (kind_) {
    case Kind::stable: {
      if (s == 0) return 0.0;
      return std::pow(s, 1.0 / a_) * draw_positive_stable(rng, a_);
    }
    case Kind::compound_poisson_exp: {
      const std::uint64_t jumps = draw_poisson(rng, a_ * s);
      double acc = 0;
      for (std::uint64_t j = 0; j < jumps; ++j) acc += draw_exponential(rng, b_);
      return acc;
    }
  }
  throw std::logic_error("draw_increment: bad kind");
}

DirectingTime DirectingTime::gamma_time(double t) {
  if (!(t > 0) || !std::isfinite(t))
    throw std::invalid_argument("gamma_time: t must be positive");
  return DirectingTime(Kind::gamma, t, "gamma-time(t=" + format_double_short(t) + ")");
}

DirectingTime DirectingTime::exponential_time(double t) {
  if (!(t >= 0) || !std::isfinite(t))
    throw std::invalid_argument("exponential_time: t must be nonnegative");
  return DirectingTime(Kind::exponential, t, "exp-time(t=" + format_double_short(t) + ")");
}

DirectingTime DirectingTime::ml_time(double t) {
  if (!(t > 0) || !std::isfinite(t)) throw std::invalid_argument("ml_time: t must be positive");
  return DirectingTime(Kind::mittag_leffler, t, "ml-time(t=" + format_double_short(t) + ")");
}

double DirectingTime::draw(Rng& rng) const {
  switch (kind_) {
    case Kind::gamma: return draw_gamma(rng, t_, 1.0);
    case Kind::exponential: return t_ == 0 ? 0.0 : t_ * (-std::log(rng.next_double_open()));
    case Kind::mittag_leffler:
      if (t_ > 1)
        throw std::domain_error("DirectingTime: Mittag-Leffler time has no sampler for t > 1");
      return draw_mittag_leffler(rng, t_, 1.0);
  }
  throw std::logic_error("DirectingTime::draw: bad kind");
}

SampleBatch sample_base_increment(const BaseProcess& base, double s, std::uint64_t n,
                                  std::uint64_t seed, unsigned workers) {
  if (n == 0) throw std::invalid_argument("sample_base_increment: n must be >= 1");
  std::string desc = base.describe() + "@s=" + format_double_short(s);
  return generate_batch(n, seed, workers, std::move(desc),
                        [&base, s](Rng& rng) { return base.draw_increment(rng, s); });
}

SampleBatch sample_subordinated(const BaseProcess& base, const DirectingTime& directing,
                                std::uint64_t n, std::uint64_t seed, unsigned workers) {
  if (n == 0) throw std::invalid_argument("sample_subordinated: n must be >= 1");
  std::string desc = "subordinated(" + base.describe() + ";" + directing.describe() + ")";
  return generate_batch(n, seed, workers, std::move(desc), [&base, &directing](Rng& rng) {
    const double s = directing.draw(rng);
    return base.draw_increment(rng, s);
  });
}

LaplaceTransformSpec closed_form_subordinated_lt(const PsiExponent& psi,
                                                 const DirectingTime& directing) {
  switch (directing.kind()) {
    case DirectingTime::Kind::gamma:
      return LaplaceTransformSpec::gid(PsiExponent::gamma_subordinated(psi, directing.t()));
    case DirectingTime::Kind::exponential:
      return LaplaceTransformSpec::gid(PsiExponent::scaled(psi, directing.t()));
    case DirectingTime::Kind::mittag_leffler:
      return LaplaceTransformSpec::gid(PsiExponent::power_subordinated(psi, directing.t()));
  }
  throw std::logic_error("closed_form_subordinated_lt: bad kind");
}

GridReport verify_subordination_gid(const PsiExponent& psi, const DirectingTime& directing,
                                    const CmGrid& grid) {
  GridReport rep = gid_check(closed_form_subordinated_lt(psi, directing), grid);
  const bool bounded_regime = directing.kind() != DirectingTime::Kind::exponential;
  if (bounded_regime && directing.t() > 1) {
    rep.note = (rep.note.empty() ? "" : rep.note + "; ") + std::string("negative control: ") +
               directing.describe() +
               " has t > 1, outside the regime where geometric infinite divisibility is guaranteed";
  }
  return rep;
}

}  // namespace gidlab
