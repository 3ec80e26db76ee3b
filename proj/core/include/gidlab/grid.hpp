#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace gidlab {

std::vector<double> linear_grid(double lo, double hi, int points);
std::vector<double> log_grid(double lo, double hi, int points);

/// Evaluation grid plus values, optional reference values and standard-error
/// bands, and per-point / overall verdicts. The CSV schema is
/// lambda,value,reference,se,pass with empty cells for absent columns.
struct GridReport {
  std::vector<double> grid;        // strictly increasing
  std::vector<double> values;
  std::vector<double> reference;   // empty when not applicable
  std::vector<double> se;          // empty when not applicable
  std::vector<char> pass;          // per-point flags, same length as grid
  bool overall = true;
  std::size_t worst_index = 0;
  double worst_magnitude = 0.0;    // meaning depends on producer; see note
  std::string note;

  void write_csv(std::ostream& out) const;
  void write_csv_file(const std::string& path) const;
  std::string csv() const;
};

}  // namespace gidlab
