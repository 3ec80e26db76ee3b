#pragma once

#include <cstddef>
#include <vector>

#include "gidlab/batch.hpp"

namespace gidlab {

struct KsResult {
  double statistic = 0;
  double threshold = 0;
  bool pass = false;
  double level = 0.05;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Two-sample Kolmogorov-Smirnov test against the asymptotic threshold
/// c(level)*sqrt((n+m)/(n*m)) with c(level) = sqrt(-ln(level/2)/2)
/// (c(0.05) ~= 1.358). Tie values advance both empirical CDFs together.
KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b,
                       double level = 0.05);
KsResult ks_two_sample(const SampleBatch& a, const SampleBatch& b, double level = 0.05);

}  // namespace gidlab
