#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace sarp {

/// Dense row-major matrix of doubles. Batches are stored one sample per row.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVector = Eigen::Matrix<double, 1, Eigen::Dynamic>;

/// "rows x cols" for error messages.
std::string shape_str(const Matrix& m);
std::string shape_str(Eigen::Index rows, Eigen::Index cols);

/// Throws NumericError naming `what` if any entry is NaN or Inf.
void require_finite(const Matrix& m, std::string_view what);

/// Throws DimensionError if shapes differ.
void require_same_shape(const Matrix& a, const Matrix& b, std::string_view what);

}  // namespace sarp
