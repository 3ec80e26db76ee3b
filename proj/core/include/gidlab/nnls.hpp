#pragma once

#include <cstddef>
#include <vector>

namespace gidlab {

/// Dense least squares min ||y - A x||_2 via Householder QR.
/// columns[j] is the j-th column of A; all columns must have y.size() rows.
std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  const std::vector<double>& y);

/// Nonnegative least squares (Lawson-Hanson active set): min ||y - A x||_2
/// subject to x >= 0. Small dense problems only.
std::vector<double> nnls(const std::vector<std::vector<double>>& columns,
                         const std::vector<double>& y, std::size_t max_iter = 300);

}  // namespace gidlab
