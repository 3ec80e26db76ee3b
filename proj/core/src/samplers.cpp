#include "gidlab/samplers.hpp"

#include <cmath>
#include <stdexcept>

#include "gidlab/csv.hpp"

namespace gidlab {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

double draw_uniform(Rng& rng) { return rng.next_double_open(); }

double draw_exponential(Rng& rng, double rate) {
  return -std::log(rng.next_double_open()) / rate;
}

double draw_normal(Rng& rng) {
  // Box-Muller, cosine branch only; no cached state so each draw consumes a
  // fixed number of generator words.
  const double u1 = rng.next_double_open();
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double draw_gamma(Rng& rng, double shape, double rate) {
  if (shape < 1.0) {
    // boost: G_s = G_{s+1} * U^(1/s)
    const double g = draw_gamma(rng, shape + 1.0, 1.0);
    const double u = rng.next_double_open();
    return g * std::pow(u, 1.0 / shape) / rate;
  }
  // Marsaglia-Tsang squeeze method
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = draw_normal(rng);
    const double t = 1.0 + c * x;
    if (t <= 0) continue;
    const double v = t * t * t;
    const double u = rng.next_double_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d - d * v + d * std::log(v)) return d * v / rate;
  }
}

std::uint64_t draw_geometric(Rng& rng, double p) {
  if (p == 1.0) return 1;
  if (p > 0.99) {
    // direct Bernoulli counting; log1p(-p) loses precision here
    std::uint64_t k = 1;
    while (rng.next_double() >= p) ++k;
    return k;
  }
  const double u = rng.next_double_open();
  double g = std::ceil(std::log(u) / std::log1p(-p));
  if (!(g >= 1)) g = 1;
  return static_cast<std::uint64_t>(g);
}

std::uint64_t draw_poisson(Rng& rng, double mean) {
  if (mean < 0 || !std::isfinite(mean)) throw std::invalid_argument("draw_poisson: bad mean");
  // count unit-rate arrivals before `mean`; stable for any mean, cost O(mean)
  std::uint64_t k = 0;
  double t = 0;
  for (;;) {
    t -= std::log(rng.next_double_open());
    if (t > mean) return k;
    ++k;
  }
}

double draw_positive_stable(Rng& rng, double alpha) {
  if (alpha == 1.0) return 1.0;  // degenerate: LT exp(-lambda)
  // Kanter representation S = (A(U)/E)^((1-a)/a) with Zolotarev's
  //   A(u) = sin(a*pi*u)^(a/(1-a)) * sin((1-a)*pi*u) / sin(pi*u)^(1/(1-a)),
  // T = pi*U on (0,pi), E standard exponential. In log space the exponents
  // are 1, (1-a)/a, -1/a, -(1-a)/a on sin(aT), sin((1-a)T), sin(T), E; the
  // grouping below spends two log calls. E[exp(-l*S)] = exp(-l^a); the LT
  // oracle tests pin this down.
  const double theta = kPi * rng.next_double_open();
  const double e = -std::log(rng.next_double_open());
  const double st = std::sin(theta);
  const double r = (1.0 - alpha) / alpha;
  const double ls = std::log(std::sin(alpha * theta) / st) +
                    r * std::log(std::sin((1.0 - alpha) * theta) / (st * e));
  return std::exp(ls);
}

double draw_mittag_leffler(Rng& rng, double alpha, double scale) {
  if (alpha == 1.0) return scale * (-std::log(rng.next_double_open()));
  const double w = -std::log(rng.next_double_open());
  const double s = draw_positive_stable(rng, alpha);
  return scale * (std::pow(w, 1.0 / alpha) * s);
}

Family Family::exponential(double rate) {
  if (!(rate > 0) || !std::isfinite(rate))
    throw std::invalid_argument("Family::exponential: rate must be positive");
  return Family(Kind::exponential, rate, 0, "exp(rate=" + format_double_short(rate) + ")");
}

Family Family::gamma(double shape, double rate) {
  if (!(shape > 0) || !(rate > 0))
    throw std::invalid_argument("Family::gamma: shape and rate must be positive");
  return Family(Kind::gamma, shape, rate,
                "gamma(shape=" + format_double_short(shape) + ",rate=" + format_double_short(rate) + ")");
}

Family Family::mittag_leffler(double alpha, double scale) {
  if (!(alpha > 0) || !(alpha <= 1))
    throw std::invalid_argument("Family::mittag_leffler: alpha must be in (0,1]");
  if (!(scale > 0)) throw std::invalid_argument("Family::mittag_leffler: scale must be positive");
  return Family(Kind::mittag_leffler, alpha, scale,
                "ml(alpha=" + format_double_short(alpha) + ",scale=" + format_double_short(scale) + ")");
}

Family Family::positive_stable(double alpha) {
  if (!(alpha > 0) || !(alpha <= 1))
    throw std::invalid_argument("Family::positive_stable: alpha must be in (0,1]");
  return Family(Kind::positive_stable, alpha, 0,
                "stable(alpha=" + format_double_short(alpha) + ")");
}

Family Family::constant(double value) {
  if (!(value > 0) || !std::isfinite(value))
    throw std::invalid_argument("Family::constant: value must be positive");
  return Family(Kind::constant, value, 0, "constant(value=" + format_double_short(value) + ")");
}

double Family::draw(Rng& rng) const {
  switch (kind_) {
    case Kind::exponential: return draw_exponential(rng, a_);
    case Kind::gamma: return draw_gamma(rng, a_, b_);
    case Kind::mittag_leffler: return draw_mittag_leffler(rng, a_, b_);
    case Kind::positive_stable: return draw_positive_stable(rng, a_);
    case Kind::constant: return a_;
  }
  throw std::logic_error("Family::draw: bad kind");
}

double Family::closed_lt(double lambda) const {
  switch (kind_) {
    case Kind::exponential: return a_ / (a_ + lambda);
    case Kind::gamma: return std::pow(b_ / (b_ + lambda), a_);
    case Kind::mittag_leffler: return 1.0 / (1.0 + std::pow(b_ * lambda, a_));
    case Kind::positive_stable: return std::exp(-std::pow(lambda, a_));
    case Kind::constant: return std::exp(-a_ * lambda);
  }
  throw std::logic_error("Family::closed_lt: bad kind");
}

namespace {
void require_n(std::uint64_t n, const char* who) {
  if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}
}  // namespace

SampleBatch sample_exponential(double rate, std::uint64_t n, std::uint64_t seed, unsigned workers) {
  require_n(n, "sample_exponential");
  Family f = Family::exponential(rate);
  return generate_batch(n, seed, workers, f.describe(),
                        [rate](Rng& rng) { return draw_exponential(rng, rate); });
}

SampleBatch sample_gamma(double shape, double rate, std::uint64_t n, std::uint64_t seed,
                         unsigned workers) {
  require_n(n, "sample_gamma");
  Family f = Family::gamma(shape, rate);
  return generate_batch(n, seed, workers, f.describe(),
                        [shape, rate](Rng& rng) { return draw_gamma(rng, shape, rate); });
}

SampleBatch sample_geometric(double p, std::uint64_t n, std::uint64_t seed, unsigned workers) {
  require_n(n, "sample_geometric");
  if (!(p > 0) || !(p <= 1)) throw std::invalid_argument("sample_geometric: p must be in (0,1]");
  return generate_batch(n, seed, workers, "geometric(p=" + format_double_short(p) + ")",
                        [p](Rng& rng) { return static_cast<double>(draw_geometric(rng, p)); });
}

SampleBatch sample_positive_stable(double alpha, std::uint64_t n, std::uint64_t seed,
                                   unsigned workers) {
  require_n(n, "sample_positive_stable");
  Family f = Family::positive_stable(alpha);
  return generate_batch(n, seed, workers, f.describe(),
                        [alpha](Rng& rng) { return draw_positive_stable(rng, alpha); });
}

SampleBatch sample_mittag_leffler(double alpha, double scale, std::uint64_t n, std::uint64_t seed,
                                  unsigned workers) {
  require_n(n, "sample_mittag_leffler");
  Family f = Family::mittag_leffler(alpha, scale);
  return generate_batch(n, seed, workers, f.describe(),
                        [alpha, scale](Rng& rng) { return draw_mittag_leffler(rng, alpha, scale); });
}

SampleBatch sample_family(const Family& family, std::uint64_t n, std::uint64_t seed,
                          unsigned workers) {
  require_n(n, "sample_family");
  return generate_batch(n, seed, workers, family.describe(),
                        [&family](Rng& rng) { return family.draw(rng); });
}

SampleBatch sample_geometric_compound(const Family& inner, double p, std::uint64_t n,
                                      std::uint64_t seed, unsigned workers) {
  require_n(n, "sample_geometric_compound");
  if (!(p > 0) || !(p <= 1))
    throw std::invalid_argument("sample_geometric_compound: p must be in (0,1]");
  std::string desc = "geom-compound(p=" + format_double_short(p) + ";inner=" + inner.describe() + ")";
  return generate_batch(n, seed, workers, std::move(desc), [&inner, p](Rng& rng) {
    const std::uint64_t count = draw_geometric(rng, p);
    double acc = 0;
    for (std::uint64_t j = 0; j < count; ++j) acc += inner.draw(rng);
    return acc;
  });
}

}  // namespace gidlab
