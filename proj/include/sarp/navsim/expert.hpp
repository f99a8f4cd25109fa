#pragma once

#include "sarp/common/seed.hpp"
#include "sarp/navsim/sim.hpp"

#include <json.hpp>

#include <vector>

namespace sarp::nav {

struct ExpertParams {
  double waypoint_clearance = 0.25;  ///< offset of graph nodes from wall endpoints
  double path_clearance = 0.2;        ///< minimum wall distance along graph edges
  int ring_points = 8;               ///< nodes placed around each wall endpoint
  double cruise_speed = 1.0;
  double heading_gain = 3.0;
  double switch_radius = 0.25;       ///< advance to the next waypoint within this distance
  int max_steps = 1500;
  double start_jitter_xy = 0.15;     ///< uniform half-width for demonstration starts
  double start_jitter_heading = 0.3;

  void validate() const;
};

/// Shortest path on the visibility graph of clearance-offset wall corners.
/// Returns waypoints excluding `start`, ending at `goal`. Throws
/// PlanningError if the goal cannot be reached.
std::vector<Vec2> plan_path(const WorldSpec& world, Vec2 start, Vec2 goal,
                            const ExpertParams& params);

/// Waypoint follower with proportional heading control. It tracks the
/// shortest path, so its clearance at corners is only path_clearance.
class ExpertController {
 public:
  ExpertController(std::vector<Vec2> path, const ExpertParams& params, const SimParams& sim);
  NavAction operator()(const NavObservation& obs, const Pose& pose);

 private:
  std::vector<Vec2> path_;
  std::size_t next_ = 0;
  ExpertParams params_;
  SimParams sim_;
};

/// Plans and drives from `start` to `goal`. Throws PlanningError if the
/// trajectory does not end within goal_radius.
NavTrajectory scripted_expert(const WorldSpec& world, const Pose& start, Vec2 goal,
                              const SimParams& sim, const ExpertParams& params = {});

/// Start pose perturbed uniformly by the jitter half-widths.
Pose jitter_start(const Pose& start, const ExpertParams& params, Rng& rng);

/// `per_pair` demonstrations for every (start, goal) combination, ordered
/// start-major. Each demonstration's jitter stream is derive_seed(seed, index).
std::vector<NavTrajectory> generate_demonstrations(const WorldSpec& world, const SimParams& sim,
                                                   const ExpertParams& params, int per_pair,
                                                   std::uint64_t seed);

void to_json(nlohmann::json& j, const ExpertParams& p);
void from_json(const nlohmann::json& j, ExpertParams& p);

}  // namespace sarp::nav
