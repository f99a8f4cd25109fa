#pragma once

#include "sarp/diffcore/mlp.hpp"
#include "sarp/diffcore/optim.hpp"
#include "sarp/repair/constraint.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sarp {

enum class RepairMode { lagrangian, penalty_only };
enum class DualRule { clipped, classical_alm };
enum class LrSchedule { constant, linear };
/// minibatch: shuffled minibatches through the configured optimizer.
/// line_search: full-batch gradient descent with Armijo backtracking, one
/// step per inner epoch; suited to small, stiff problems.
enum class InnerSolver { minibatch, line_search };

RepairMode parse_repair_mode(std::string_view s);
DualRule parse_dual_rule(std::string_view s);
LrSchedule parse_lr_schedule(std::string_view s);
InnerSolver parse_inner_solver(std::string_view s);
std::string_view to_string(InnerSolver s);
std::string_view to_string(RepairMode m);
std::string_view to_string(DualRule r);
std::string_view to_string(LrSchedule s);

struct RepairConfig {
  double mu0 = 5.0;
  double eta = 0.001;
  double beta = 1.5;
  double mu_max = 1e9;
  int inner_epochs = 5;
  int batch_size = 256;
  int max_outer_iters = 20;
  InnerSolver inner_solver = InnerSolver::minibatch;
  OptimizerConfig optimizer{OptimizerKind::sgd, 1e-3};  ///< lr is the initial trial step for line_search
  LrSchedule lr_schedule = LrSchedule::constant;
  double lr_final_fraction = 0.0;  ///< linear schedule ends at lr * this
  double epsilon = 0.0;            ///< SafetyCheck tolerance
  /// Inequality residuals inside the loss are max(0, g + margin); SafetyCheck
  /// always uses the declared constraint.
  double constraint_margin = 0.0;
  RepairMode mode = RepairMode::lagrangian;
  DualRule dual_rule = DualRule::clipped;
  bool summed_dual = false;        ///< update every lambda_c with sum_c g_c
  std::size_t safety_chunk = 4096; ///< rows per SafetyCheck shard
  std::uint64_t seed = 1;

  /// Throws ConfigError.
  void validate() const;
};

void to_json(nlohmann::json& j, const RepairConfig& c);
void from_json(const nlohmann::json& j, RepairConfig& c);

/// Repair samples: policy inputs s and the constant part of the predictor
/// input. The predictor sees [context, pi(s)]; context may have zero columns.
struct RepairData {
  Matrix policy_inputs;
  Matrix predictor_context;

  std::size_t size() const { return static_cast<std::size_t>(policy_inputs.rows()); }
  RepairData select(std::span<const std::size_t> rows) const;
};

struct DualState {
  RowVector lambda;
  double mu = 0.0;
  int k = 0;
};

struct AugmentedLoss {
  double loss = 0.0;            ///< L = mean ||pi(s) - pi_ref(s)||^2
  double augmented = 0.0;       ///< L - sum lambda_c g_c + mu/2 sum g_c^2
  RowVector residual_means;     ///< g_c batch means
  ModelGrads grads;             ///< d augmented / d theta
};

/// Augmented loss on one batch. `reference_outputs` are pi_ref(s)
/// for the batch. Gradients flow through the frozen predictor into the policy
/// only. Throws NumericError naming the constraint and sample when a residual
/// is not finite.
AugmentedLoss augmented_loss(const MlpModel& policy, const Matrix& reference_outputs,
                             const MlpModel& predictor, const RepairData& batch,
                             const ConstraintSet& constraints, const RowVector& lambda, double mu,
                             double margin = 0.0);

/// clipped: lambda'_c = -relu(eta g_c - lambda_c).
/// classical_alm: lambda'_c = lambda_c - mu g_c.
/// With `summed`, every g_c is replaced by sum_c g_c.
RowVector dual_update(const RowVector& lambda, double eta, const RowVector& residual_means,
                      DualRule rule = DualRule::clipped, double mu = 0.0,
                      bool summed = false);

/// beta * mu, capped at mu_max with a logged warning.
double penalty_update(double mu, double beta, double mu_max = 1e9);

struct Violation {
  std::size_t sample = 0;
  int constraint = 0;
  double residual = 0.0;
};

struct SafetyReport {
  bool safe = true;
  std::vector<Violation> violations;  ///< every (sample, constraint) above tolerance
  std::size_t violating_samples = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;         ///< over all samples and constraints
  RowVector residual_means;           ///< per constraint
};

/// Residuals of every sample under the current policy.
Matrix constraint_residuals(const MlpModel& policy, const MlpModel& predictor,
                            const ConstraintSet& constraints, const RepairData& data,
                            std::size_t chunk = 4096);

/// True iff every residual is <= epsilon (|g| for equalities).
SafetyReport safety_check(const MlpModel& policy, const MlpModel& predictor,
                          const ConstraintSet& constraints, const RepairData& data, double epsilon,
                          std::size_t chunk = 4096);

struct TraceRow {
  int k = 0;
  RowVector lambda;
  double mu = 0.0;
  double mean_residual = 0.0;
  double max_residual = 0.0;
  std::size_t violations = 0;          ///< violating (sample, constraint) pairs
  std::size_t violating_samples = 0;
  double loss = 0.0;
  double augmented = 0.0;
};

struct RepairResult {
  MlpModel policy;
  bool converged = false;
  int outer_iterations = 0;
  int returned_iteration = 0;  ///< trace row of the returned policy (0 = input policy)
  std::vector<TraceRow> trace; ///< row 0 is the input policy
  SafetyReport report;         ///< SafetyCheck of the returned policy
  std::vector<std::string> constraint_names;
};

/// Outer loop: inner minimisation, dual update, penalty update, SafetyCheck.
/// Unconverged runs return the best iterate (fewest violating samples, ties
/// by lower L).
RepairResult repair(const MlpModel& policy, const MlpModel& predictor,
                    const ConstraintSet& constraints, const RepairData& data,
                    const RepairConfig& config);

void write_trace_csv(std::ostream& out, const RepairResult& result);
void save_trace_csv(const std::filesystem::path& path, const RepairResult& result);

}  // namespace sarp
