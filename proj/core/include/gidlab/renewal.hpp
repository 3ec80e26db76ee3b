#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gidlab/batch.hpp"
#include "gidlab/samplers.hpp"

namespace gidlab {

/// Arrival times of a renewal process on [0, horizon], origin at t=0
/// (the origin is not stored as an epoch).
struct EpochSequence {
  std::vector<double> epochs;  // strictly increasing, all <= horizon
  double horizon = 0;
  std::uint64_t seed = 0;

  /// Single-column CSV ("epoch") preceded by a '#' metadata row.
  std::string csv() const;
  void write_csv_file(const std::string& path) const;
};

/// Partial sums of i.i.d. inter-arrivals until the horizon is passed.
/// Aborts if a degenerate sampler yields 1e6 epochs before 1% of the horizon.
EpochSequence simulate_renewal(const Family& inter, double horizon, std::uint64_t seed);

/// Keeps each epoch independently with probability p; order and horizon kept.
EpochSequence thin(const EpochSequence& e, double p, std::uint64_t seed);

/// Rescales every epoch (and the horizon) by c.
EpochSequence contract(const EpochSequence& e, double c);

/// Gaps t1, t2-t1, ...; the first gap is measured from the origin and the
/// incomplete gap beyond the last epoch is dropped.
SampleBatch interarrivals(const EpochSequence& e);

enum class InvarianceFamily { poisson, mittag_leffler };

struct InvarianceReport {
  double d = 0;
  double threshold = 0;
  bool pass = false;
  double p = 0;
  double c = 0;
  std::size_t original = 0;  // epochs before thinning
  std::size_t kept = 0;      // epochs after thinning
  std::string note;
};

/// Simulates the renewal process (Poisson with rate `param`, or
/// Mittag-Leffler inter-arrivals with alpha=`param`), thins by p, contracts
/// by c = p^(1/alpha) (alpha=1 for Poisson) or by c_override if nonzero, and
/// KS-compares the surviving inter-arrivals against fresh draws from the
/// original family. n_target sizes the pre-thinning epoch count.
InvarianceReport verify_thinning_invariance(InvarianceFamily family, double param, double p,
                                            std::uint64_t n_target, std::uint64_t seed,
                                            double c_override = 0, double level = 0.05);

}  // namespace gidlab
