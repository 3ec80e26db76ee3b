#include "gidlab/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gidlab/csv.hpp"

namespace gidlab {

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo < hi)) throw std::invalid_argument("linear_grid: need lo < hi and points >= 2");
  std::vector<double> g(static_cast<std::size_t>(points));
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + h * i;
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo > 0) || !(lo < hi)) throw std::invalid_argument("log_grid: need 0 < lo < hi and points >= 2");
  std::vector<double> g(static_cast<std::size_t>(points));
  const double llo = std::log10(lo), lhi = std::log10(hi);
  const double h = (lhi - llo) / (points - 1);
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = std::pow(10.0, llo + h * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

void GridReport::write_csv(std::ostream& out) const {
  out << "lambda,value,reference,se,pass\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << format_double(grid[i]) << ',' << format_double(values[i]) << ',';
    if (i < reference.size()) out << format_double(reference[i]);
    out << ',';
    if (i < se.size()) out << format_double(se[i]);
    out << ',';
    out << (i < pass.size() ? (pass[i] ? '1' : '0') : '1');
    out << '\n';
  }
}

std::string GridReport::csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

void GridReport::write_csv_file(const std::string& path) const {
  write_text_file(path, csv());
}

}  // namespace gidlab
