#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace gidlab {

/// Formats a double with up to 17 significant digits, '.' decimal separator,
/// locale-independent. All CSV output goes through this so files are
/// byte-stable across runs and worker counts.
std::string format_double(double value);

/// Shortest representation that round-trips; used in descriptors and notes.
std::string format_double_short(double value);

std::string format_u64(std::uint64_t value);

/// Creates missing parent directories, then opens the file for writing.
/// Throws std::runtime_error if the file cannot be opened.
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace gidlab
