#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "gidlab/batch.hpp"
#include "gidlab/parallel.hpp"
#include "gidlab/rng.hpp"

namespace gidlab {

double draw_uniform(Rng& rng);                       // (0,1)
double draw_exponential(Rng& rng, double rate);      // inverse CDF -ln(U)/rate
double draw_normal(Rng& rng);                        // standard normal
double draw_gamma(Rng& rng, double shape, double rate);
std::uint64_t draw_geometric(Rng& rng, double p);    // support {1,2,...}, mean 1/p
std::uint64_t draw_poisson(Rng& rng, double mean);
double draw_positive_stable(Rng& rng, double alpha);  // LT exp(-lambda^alpha), alpha in (0,1]
double draw_mittag_leffler(Rng& rng, double alpha, double scale);  // LT 1/(1+(scale*l)^alpha)

/// Inter-arrival family descriptor: the distributions the compound and
/// renewal layers draw from, with their exact transforms for oracle checks.
class Family {
 public:
  enum class Kind { exponential, gamma, mittag_leffler, positive_stable, constant };

  static Family exponential(double rate);
  static Family gamma(double shape, double rate);
  static Family mittag_leffler(double alpha, double scale);
  static Family positive_stable(double alpha);
  static Family constant(double value);  // point mass; deterministic renewal stub

  Kind kind() const { return kind_; }
  double param_a() const { return a_; }  // rate | shape | alpha | alpha
  double param_b() const { return b_; }  // -    | rate  | scale | -
  double draw(Rng& rng) const;
  double closed_lt(double lambda) const;
  const std::string& describe() const { return desc_; }

 private:
  Family(Kind k, double a, double b, std::string d)
      : kind_(k), a_(a), b_(b), desc_(std::move(d)) {}
  Kind kind_;
  double a_, b_;
  std::string desc_;
};

/// Chunked deterministic batch generation: chunk k draws from substream k of
/// `seed`, and chunks map to fixed output slots, so bytes never depend on the
/// worker count.
template <class DrawFn>
SampleBatch generate_batch(std::uint64_t n, std::uint64_t seed, unsigned workers,
                           std::string descriptor, DrawFn draw) {
  SampleBatch out;
  out.seed = seed;
  out.descriptor = std::move(descriptor);
  out.values.resize(n);
  double* data = out.values.data();
  parallel_chunks(chunk_count(n), workers, [&](std::size_t k) {
    Rng rng(seed, k);
    const std::uint64_t lo = static_cast<std::uint64_t>(k) * kChunkSize;
    const std::uint64_t hi = std::min<std::uint64_t>(n, lo + kChunkSize);
    for (std::uint64_t i = lo; i < hi; ++i) data[i] = draw(rng);
  });
  return out;
}

SampleBatch sample_exponential(double rate, std::uint64_t n, std::uint64_t seed,
                               unsigned workers = 1);
SampleBatch sample_gamma(double shape, double rate, std::uint64_t n, std::uint64_t seed,
                         unsigned workers = 1);
SampleBatch sample_geometric(double p, std::uint64_t n, std::uint64_t seed, unsigned workers = 1);
SampleBatch sample_positive_stable(double alpha, std::uint64_t n, std::uint64_t seed,
                                   unsigned workers = 1);
SampleBatch sample_mittag_leffler(double alpha, double scale, std::uint64_t n, std::uint64_t seed,
                                  unsigned workers = 1);
SampleBatch sample_family(const Family& family, std::uint64_t n, std::uint64_t seed,
                          unsigned workers = 1);

/// n draws of sum_{j=1}^{N} X_j with N geometric(p) and X_j i.i.d. from `inner`.
SampleBatch sample_geometric_compound(const Family& inner, double p, std::uint64_t n,
                                      std::uint64_t seed, unsigned workers = 1);

}  // namespace gidlab
