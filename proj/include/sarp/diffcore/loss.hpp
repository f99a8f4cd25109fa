#pragma once

#include "sarp/diffcore/matrix.hpp"

#include <span>

namespace sarp {

struct LossResult {
  double value = 0.0;
  Matrix grad;  ///< d value / d prediction, same shape as the prediction
};

/// Mean over rows of the squared-error sum per row. Gradient 2 (pred - target) / rows.
LossResult loss_mse(const Matrix& pred, const Matrix& target);

/// Probabilities below this floor are clamped before taking the log.
inline constexpr double kProbabilityFloor = 1e-12;

/// Mean negative log-probability of the labelled class. `probs` rows are
/// softmax outputs. Probabilities below kProbabilityFloor are clamped (and
/// logged); their gradient is taken at the clamped value.
LossResult loss_cross_entropy(const Matrix& probs, std::span<const int> labels);

}  // namespace sarp
