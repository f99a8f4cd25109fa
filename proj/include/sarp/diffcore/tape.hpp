#pragma once

#include "sarp/diffcore/matrix.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace sarp {

enum class ParamKind { weight, bias };

/// Identifies one parameter tensor: which model slot, which layer, W or b.
struct ParamKey {
  int slot = 0;
  int layer = 0;
  ParamKind kind = ParamKind::weight;

  auto operator<=>(const ParamKey&) const = default;
};

/// Result of a reverse pass.
struct Gradients {
  std::map<ParamKey, Matrix> params;
  std::map<std::size_t, Matrix> inputs;

  /// Gradient of a parameter, or nullptr if it was not reachable.
  const Matrix* param(const ParamKey& key) const;
  const Matrix* input(std::size_t node) const;
};

/// Reverse-mode tape over dense matrices.
///
/// Nodes are appended in evaluation order, so the node index is already a
/// topological order and the reverse pass is a single backwards sweep.
/// Constants never receive gradients; inputs and parameters do and are
/// reported in the returned Gradients.
class Tape {
 public:
  using Node = std::size_t;

  Node constant(Matrix value);
  Node input(Matrix value);
  Node parameter(const ParamKey& key, Matrix value);
  /// Reference forms: `value` must outlive the tape.
  Node constant_ref(const Matrix& value);
  Node parameter_ref(const ParamKey& key, const Matrix& value);

  /// x * w^T + b, with b a 1 x out row broadcast over the batch.
  Node linear(Node x, Node w, Node b);
  Node relu(Node x);
  Node tanh(Node x);
  /// Row-wise softmax.
  Node softmax(Node x);
  /// Column-wise x * scale + shift with constant scale/shift.
  Node affine_columns(Node x, const RowVector& scale, const RowVector& shift);
  Node concat_columns(Node a, Node b);
  Node select_columns(Node x, std::vector<int> columns);
  Node abs(Node x);
  /// bias + sum_i w_i * x_i. Width-1 operands broadcast across columns.
  Node weighted_sum(const std::vector<std::pair<Node, double>>& terms, double bias);
  /// 1 x cols matrix of per-column means over rows.
  Node column_means(Node x);
  /// 1 x 1: mean over rows of the per-row squared error sum against a constant target.
  Node mse(Node pred, const Matrix& target);
  /// 1 x 1: mean negative log-probability of the labelled class.
  Node cross_entropy(Node probs, std::span<const int> labels);
  /// 1 x 1: sum of x .* w for a constant w of the same shape.
  Node dot(Node x, const Matrix& w);
  /// 1 x 1: sum of squares of all entries.
  Node sum_squares(Node x);

  const Matrix& value(Node n) const;
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  Node last() const;
  void clear() { nodes_.clear(); }

  /// Reverse pass from `output`, seeded with `output_grad`.
  /// Throws Error on an empty tape and DimensionError on a seed shape mismatch.
  Gradients backward(Node output, const Matrix& output_grad) const;

  /// Number of nodes whose backward rule ran during the last reverse pass.
  std::size_t last_backward_visits() const { return visits_; }

 private:
  enum class Role { constant, input, parameter, op };
  using Backward =
      std::function<void(const Tape& tape, const Matrix& grad, std::vector<Matrix>& grads)>;

  struct Entry {
    Matrix value;
    const Matrix* ref = nullptr;
    Role role = Role::op;
    ParamKey key;
    Backward backward;
  };

  Node push(Matrix value, Role role, Backward backward = {});
  const Matrix& val(Node n) const { return nodes_[n].ref ? *nodes_[n].ref : nodes_[n].value; }
  void check(Node n) const;

  std::vector<Entry> nodes_;
  mutable std::size_t visits_ = 0;
};

/// Adds `g` into `slot`, allocating on first use.
void accumulate(Matrix& slot, const Matrix& g);

}  // namespace sarp
