#pragma once

#include "sarp/diffcore/mlp.hpp"
#include "sarp/eval/metrics.hpp"
#include "sarp/navsim/expert.hpp"
#include "sarp/navsim/sim.hpp"
#include "sarp/repair/constraint.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sarp {

/// Test rollouts. Trial i starts from starts[i % S] towards
/// goals[(i / S) % G], with the start jittered by Rng(derive_seed(seed, i)),
/// so two policies evaluated with the same spec see identical worlds.
struct NavTrialSpec {
  int trials = 200;
  int max_steps = 600;
  std::uint64_t seed = 7;
  double jitter_xy = 0.15;
  double jitter_heading = 0.3;
  int threads = 1;  ///< trials are independent; results do not depend on this
};

std::vector<nav::NavTrajectory> run_nav_trials(const MlpModel& policy, const nav::WorldSpec& world,
                                               const nav::SimParams& sim,
                                               const NavTrialSpec& spec);

/// GR, E and the raw counts behind them. With `speed_bound` the report also
/// carries the share of steps whose commanded speed respects it.
MetricsReport nav_report(std::span<const nav::NavTrajectory> trajectories,
                         const std::string& scenario, const std::string& policy,
                         std::uint64_t seed, std::optional<double> speed_bound = std::nullopt);

/// Same report recomputed from a persisted rollout log (to_sample_set with
/// with_log) and the per-trajectory outcomes.
MetricsReport nav_report_from_log(const SampleSet& log, std::span<const nav::Outcome> outcomes,
                                  const std::string& scenario, const std::string& policy,
                                  std::uint64_t seed,
                                  std::optional<double> speed_bound = std::nullopt);

/// Held-out windows with their recorded ground truth.
struct GaitEvalData {
  Matrix policy_inputs;
  Matrix predictor_context;
  Matrix true_actions;
  Matrix true_features;
};

/// One policy pushed through the predictor on every window.
struct GaitPolicyEval {
  Matrix actions;
  Matrix predictions;
  std::vector<bool> unsafe;  ///< any residual above epsilon
  std::vector<double> peak_pressure;
  std::vector<double> peak_rate;  ///< max |a(k+1) - a(k)| inside the window
};

GaitPolicyEval evaluate_gait_policy(const MlpModel& policy, const MlpModel& predictor,
                                    const ConstraintSet& constraints, const GaitEvalData& data,
                                    std::span<const int> pressure_columns, double epsilon);

/// RC on the mean per-window peak pressure and peak action rate, E in
/// repaired-fraction form, E_windows as the share of safe windows, and SE on
/// the windows the original policy already handled safely.
MetricsReport gait_report(const GaitPolicyEval& original, const GaitPolicyEval& candidate,
                          const GaitEvalData& data, const std::string& scenario,
                          const std::string& policy, std::uint64_t seed);

}  // namespace sarp
