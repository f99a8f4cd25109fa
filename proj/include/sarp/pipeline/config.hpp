#pragma once

#include "sarp/datasets/transforms.hpp"
#include "sarp/diffcore/fit.hpp"
#include "sarp/diffcore/mlp.hpp"
#include "sarp/eval/scenario.hpp"
#include "sarp/gaitsyn/gait.hpp"
#include "sarp/navsim/expert.hpp"
#include "sarp/navsim/wander.hpp"
#include "sarp/navsim/world.hpp"
#include "sarp/repair/constraint.hpp"
#include "sarp/repair/repair.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sarp::pipeline {

inline constexpr int kConfigVersion = 1;

enum class Scenario { nav, gait };
Scenario parse_scenario(std::string_view s);
std::string_view to_string(Scenario s);

struct NetworkSpec {
  std::vector<int> hidden;
  Activation activation = Activation::relu;
  OutputActivation output = OutputActivation::identity;
  FitConfig fit;
};

/// How the navigation repair dataset is assembled: states the cloned policy
/// visits from the training starts (with optional action noise for wider
/// coverage) plus, optionally, the demonstration states.
struct RepairSetSpec {
  int trials = 120;
  int max_steps = 600;
  double noise_v = 0.0;       ///< std of additive speed noise while collecting
  double noise_omega = 0.0;   ///< std of additive turn-rate noise while collecting
  bool include_demos = true;
  /// States whose smallest range is already below this are dropped: no
  /// action can undo a reading taken before it.
  double min_range = 0.3;
  /// Per-axis resolution of the actuator grid used to drop states for which
  /// no admissible action satisfies the constraints under the predictor.
  /// 0 disables the filter.
  int feasibility_grid = 7;
  std::size_t max_samples = 0;  ///< seeded subsample, 0 keeps everything
};

struct NavSettings {
  nav::WorldSpec world = nav::mini_hospital();
  nav::SimParams sim;
  nav::ExpertParams expert;
  nav::WanderParams wander;
  int demos_per_pair = 5;
  std::size_t explore_steps = 10000;
  /// Fraction of the exploration rows the collision model is trained on.
  double explore_fraction = 1.0;
  /// Held-out exploration rows for measuring collision-model accuracy.
  std::size_t explore_test_steps = 5000;
  RepairSetSpec repair_set;
  NavTrialSpec test;
  std::optional<double> speed_bound;
};

struct GaitSettings {
  gait::GaitConfig generator;
  int history = 10;
  int horizon = 30;
  gait::Observability observability = gait::Observability::full;
  PredictorIndexing indexing = PredictorIndexing::inclusive;
  double train_fraction = 0.8;
  std::size_t repair_samples = 0;  ///< seeded subsample of training windows, 0 = all
  double pressure_limit = 50.0;    ///< drawn on the pressure histograms
};

struct SweepSpec {
  std::vector<double> explore_fractions{0.02, 0.05, 0.2, 1.0};
  /// Collision models trained per level (different subsamples and
  /// initializations); the curves plot the level means.
  int replicates = 5;
};

struct RunConfig {
  int version = kConfigVersion;
  Scenario scenario = Scenario::nav;
  std::string name = "run";
  std::uint64_t seed = 1;
  int threads = 1;
  std::string output_dir;
  NavSettings nav;
  GaitSettings gait;
  NetworkSpec policy;
  NetworkSpec predictor;
  nlohmann::json constraints = nlohmann::json::array();
  RepairConfig repair;
  /// Also repair in penalty-only mode and emit the comparison table.
  bool compare_penalty = false;
  SweepSpec sweep;

  /// Feature and action widths the constraints are written against.
  int feature_width() const;
  int action_width() const;
  ConstraintSet constraint_set() const;
  /// Throws ConfigError on the first problem found.
  void validate() const;
};

/// Defaults for a scenario before any config file is applied.
RunConfig default_config(Scenario scenario);
/// Strict parse: unknown keys are rejected, then the result is validated.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
/// Resolved form with every default written out.
nlohmann::json to_json(const RunConfig& c);

/// Seed of one stochastic component, derived from the master seed.
std::uint64_t stream_seed(const RunConfig& c, std::string_view component);

}  // namespace sarp::pipeline
