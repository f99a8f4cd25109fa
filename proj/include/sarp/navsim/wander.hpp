#pragma once

#include "sarp/common/seed.hpp"
#include "sarp/datasets/sample_set.hpp"
#include "sarp/navsim/sim.hpp"

#include <json.hpp>

namespace sarp::nav {

struct WanderParams {
  double speed_min = 0.2;       ///< per-episode forward speed is uniform in [speed_min, speed_max]
  double speed_max = 1.2;
  double omega_sigma = 0.25;    ///< std of the per-step turn-rate perturbation
  double omega_decay = 0.9;     ///< turn-rate smoothing factor
  double avoid_distance = 0.45; ///< turn away when a ray is shorter than this
  int episode_steps = 200;
  double start_clearance = 0.5; ///< minimum wall distance of random episode starts
  /// Per-step probability of replacing the wander action by one drawn
  /// uniformly from the actuator box, so that actions near walls are not
  /// tied to the avoidance reflex.
  double random_action_prob = 0.0;

  void validate() const;
};

/// Constant forward speed with a smoothly varying random turn rate. When the
/// shortest ray is below avoid_distance the robot turns away from it at full
/// rate.
class WanderPolicy {
 public:
  WanderPolicy(const WanderParams& params, const SimParams& sim, double speed);
  NavAction operator()(const NavObservation& obs, Rng& rng);

 private:
  WanderParams params_;
  SimParams sim_;
  std::vector<double> offsets_;
  double speed_;
  double omega_ = 0.0;
};

/// Collision-labelled exploration data: states are the M range readings at t,
/// actions the wander action at t, and the single feature column "collision"
/// is detect_collision of the observation at t+1. Episodes start at random
/// free poses and are cut so the total is exactly `total_steps` rows.
SampleSet explore(const WorldSpec& world, const SimParams& sim, const WanderParams& params,
                  std::size_t total_steps, std::uint64_t seed);

std::vector<Column> range_columns(int n_rays);

void to_json(nlohmann::json& j, const WanderParams& p);
void from_json(const nlohmann::json& j, WanderParams& p);

}  // namespace sarp::nav
