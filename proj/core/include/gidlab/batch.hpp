#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gidlab {

/// A batch of i.i.d. nonnegative draws plus the metadata needed to regenerate it.
struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::string descriptor;

  std::size_t n() const { return values.size(); }

  /// Single-column CSV ("value") preceded by a '#' metadata row.
  std::string csv() const;
  void write_csv_file(const std::string& path) const;
};

}  // namespace gidlab
