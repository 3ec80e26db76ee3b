#include "gidlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gidlab {

KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b, double level) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  if (!(level > 0) || !(level < 1))
    throw std::invalid_argument("ks_two_sample: level must be in (0,1)");
  std::vector<double> s1 = a, s2 = b;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  const std::size_t n = s1.size(), m = s2.size();
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < n && j < m) {
    const double x = std::min(s1[i], s2[j]);
    while (i < n && s1[i] == x) ++i;
    while (j < m && s2[j] == x) ++j;
    const double gap = std::abs(static_cast<double>(i) / static_cast<double>(n) -
                                static_cast<double>(j) / static_cast<double>(m));
    if (gap > d) d = gap;
  }
  KsResult r;
  r.statistic = d;
  r.level = level;
  r.n1 = n;
  r.n2 = m;
  const double c = std::sqrt(-std::log(level / 2.0) / 2.0);
  r.threshold = c * std::sqrt(static_cast<double>(n + m) /
                              (static_cast<double>(n) * static_cast<double>(m)));
  r.pass = r.statistic <= r.threshold;
  return r;
}

KsResult ks_two_sample(const SampleBatch& a, const SampleBatch& b, double level) {
  return ks_two_sample(a.values, b.values, level);
}

}  // namespace gidlab
