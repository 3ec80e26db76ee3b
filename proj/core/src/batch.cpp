#include "gidlab/batch.hpp"

#include <sstream>

#include "gidlab/csv.hpp"

namespace gidlab {

std::string SampleBatch::csv() const {
  std::ostringstream os;
  os << "# descriptor=" << descriptor << " n=" << format_u64(values.size()) << " seed=" << format_u64(seed) << '\n';
  os << "value\n";
  for (double v : values) os << format_double(v) << '\n';
  return os.str();
}

void SampleBatch::write_csv_file(const std::string& path) const {
  write_text_file(path, csv());
}

}  // namespace gidlab
