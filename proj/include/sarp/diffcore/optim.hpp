#pragma once

#include "sarp/diffcore/mlp.hpp"

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

namespace sarp {

/// theta <- theta - lr * grad / batch_size, in place.
/// Throws NumericError naming the layer if a gradient is not finite.
void apply_sgd(MlpModel& model, const ModelGrads& grads, double lr, std::size_t batch_size);

/// Value-returning form of apply_sgd.
MlpModel sgd_step(const MlpModel& model, const ModelGrads& grads, double lr,
                  std::size_t batch_size);

enum class OptimizerKind { sgd, adam };
OptimizerKind parse_optimizer(std::string_view s);
std::string_view to_string(OptimizerKind k);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::sgd;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Stateful first-order optimizer bound to one model's shapes.
class Optimizer {
 public:
  virtual ~Optimizer() = default;
  /// One update with mean-reduced gradients. `lr_scale` multiplies the base rate.
  virtual void step(MlpModel& model, const ModelGrads& grads, double lr_scale = 1.0) = 0;
};

std::unique_ptr<Optimizer> make_optimizer(const OptimizerConfig& config, const MlpModel& model);

}  // namespace sarp
