#pragma once

#include "sarp/diffcore/mlp.hpp"
#include "sarp/diffcore/optim.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sarp {

struct FitConfig {
  int epochs = 50;
  int batch_size = 64;
  OptimizerConfig optimizer{OptimizerKind::adam, 1e-3};
};

/// One row per epoch.
struct FitLog {
  std::vector<double> epoch_loss;
};

/// Minibatch regression with MSE. Rows are shuffled each epoch from `seed`.
FitLog fit_regression(MlpModel& model, const Matrix& inputs, const Matrix& targets,
                      const FitConfig& config, std::uint64_t seed);

/// Minibatch classification with cross-entropy on a softmax-output model.
FitLog fit_classifier(MlpModel& model, const Matrix& inputs, std::span<const int> labels,
                      const FitConfig& config, std::uint64_t seed);

/// Fraction of rows whose argmax equals the label.
double classification_accuracy(const MlpModel& model, const Matrix& inputs,
                               std::span<const int> labels);

/// Copy of the listed rows.
Matrix gather_rows(const Matrix& m, std::span<const std::size_t> rows);

}  // namespace sarp
