#pragma once

#include "sarp/diffcore/matrix.hpp"
#include "sarp/diffcore/tape.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sarp {

enum class Activation { relu, tanh };
enum class OutputActivation { identity, softmax };

std::string_view to_string(Activation a);
std::string_view to_string(OutputActivation a);
Activation parse_activation(std::string_view s);
OutputActivation parse_output_activation(std::string_view s);

/// Fixed per-column affine map x -> (x - mean) / std. Empty means identity.
struct Normalization {
  RowVector mean;
  RowVector std;

  bool empty() const { return mean.size() == 0; }
  bool operator==(const Normalization&) const = default;
};

/// Feedforward network used as policy, predictive model or frozen reference.
///
/// Inputs and outputs are in physical units: the model carries the z-score
/// statistics it was trained with and applies them internally. Softmax
/// outputs ignore the output normalization.
struct MlpModel {
  std::vector<int> layer_sizes;
  std::vector<Activation> hidden;  ///< one per hidden layer
  OutputActivation output = OutputActivation::identity;
  std::vector<Matrix> weights;     ///< weights[i]: layer_sizes[i+1] x layer_sizes[i]
  std::vector<Matrix> biases;      ///< biases[i]: 1 x layer_sizes[i+1]
  Normalization input_norm;
  Normalization output_norm;

  /// Seeded Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
  static MlpModel create(std::vector<int> layer_sizes, std::vector<Activation> hidden,
                         OutputActivation output, std::uint64_t seed);
  /// Same activation on every hidden layer.
  static MlpModel create(std::vector<int> layer_sizes, Activation hidden, OutputActivation output,
                         std::uint64_t seed);

  int input_width() const { return layer_sizes.front(); }
  int output_width() const { return layer_sizes.back(); }
  int num_layers() const { return static_cast<int>(weights.size()); }
  std::size_t param_count() const;

  /// Throws DimensionError if any shape invariant is broken.
  void validate() const;

  bool operator==(const MlpModel&) const = default;
};

/// Evaluate a batch (one sample per row). When `tape` is given the pass is
/// recorded with the model's parameters registered under slot 0.
Matrix forward(const MlpModel& model, const Matrix& input, Tape* tape = nullptr);

/// Record a forward pass on an existing tape. With `trainable == false` the
/// parameters are recorded as constants: gradients still flow through the
/// model into `input` but no parameter gradients are produced.
Tape::Node record_forward(const MlpModel& model, Tape& tape, Tape::Node input, int slot,
                          bool trainable = true);

/// Reverse pass from the last node of `tape`.
Gradients backward(const Tape& tape, const Matrix& output_grad);

/// Per-layer gradients for one model slot, zero-filled where unreachable.
struct ModelGrads {
  std::vector<Matrix> weights;
  std::vector<Matrix> biases;

  static ModelGrads zeros_like(const MlpModel& model);
  static ModelGrads from(const Gradients& grads, const MlpModel& model, int slot);
  void add(const ModelGrads& other);
  void scale(double s);
  double squared_norm() const;
};

/// Text serialization, format version 1 (see README). Round trip is bit-exact.
void write_model(std::ostream& out, const MlpModel& model);
MlpModel read_model(std::istream& in);
void save_model(const std::filesystem::path& path, const MlpModel& model);
MlpModel load_model(const std::filesystem::path& path);

}  // namespace sarp
