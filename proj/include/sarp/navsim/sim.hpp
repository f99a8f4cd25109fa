#pragma once

#include "sarp/datasets/sample_set.hpp"
#include "sarp/diffcore/matrix.hpp"
#include "sarp/navsim/world.hpp"

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace sarp {
struct MlpModel;
}

namespace sarp::nav {

/// Policy input: goal location, distance and bearing, M range readings.
struct NavObservation {
  double x_g = 0.0;
  double y_g = 0.0;
  double d_g = 0.0;
  double phi_g = 0.0;  ///< bearing to goal relative to heading, wrapped
  std::vector<double> ranges;

  /// Row vector [x_g, y_g, d_g, phi_g, r_1..r_M].
  RowVector encode() const;
  double min_range() const;
};

struct NavAction {
  double v = 0.0;
  double omega = 0.0;
  bool operator==(const NavAction&) const = default;
};

/// Absolute offsets of the rays relative to the heading: evenly spanning the
/// field of view, starting at -fov/2 (so -pi .. pi - 2pi/M for a full circle).
std::vector<double> ray_offsets(const SimParams& params);

/// Distance to the nearest wall along each world-frame angle, r_max if none.
std::vector<double> raycast(const WorldSpec& world, Vec2 origin, std::span<const double> angles,
                            double r_max);
std::vector<double> raycast(const WorldSpec& world, const Pose& pose, const SimParams& params);

NavObservation observe(const WorldSpec& world, const Pose& pose, Vec2 goal,
                       const SimParams& params);

/// 1 iff the smallest range reading is strictly below `threshold`.
int detect_collision(const NavObservation& obs, double threshold);

NavAction clamp_action(NavAction a, const SimParams& params);

/// Free-space unicycle motion with constant (v, omega), integrated exactly
/// along the arc.
Pose integrate_unicycle(const Pose& pose, NavAction a, double dt);

struct StepResult {
  Pose state;
  bool contact = false;
};

/// One simulator step. The action is clamped to the actuator limits. If the
/// arc would bring the robot within contact_radius of a wall, the motion is
/// cut at the last admissible point of the arc and contact is flagged.
StepResult step(const WorldSpec& world, const Pose& pose, NavAction a, const SimParams& params);

enum class Outcome { reached, collided, timeout };
std::string_view to_string(Outcome o);
Outcome parse_outcome(std::string_view s);

struct NavStep {
  Pose pose;
  NavObservation obs;
  NavAction action;     ///< clamped action actually applied
  bool contact = false; ///< contact occurred during this step
  bool unsafe = false;  ///< detect_collision(obs) or contact
};

struct NavTrajectory {
  Pose start;
  Vec2 goal;
  std::vector<NavStep> steps;
  Outcome outcome = Outcome::timeout;
  Pose final_pose;
};

using Controller = std::function<NavAction(const NavObservation&, const Pose&)>;

/// Runs a controller from `start` until the goal is within goal_radius
/// (checked before acting), a contact occurs, or max_steps actions were taken.
NavTrajectory rollout(const Controller& controller, const WorldSpec& world, const Pose& start,
                      Vec2 goal, int max_steps, const SimParams& params);
/// Same with an MLP policy mapping the encoded observation to (v, omega).
NavTrajectory rollout(const MlpModel& policy, const WorldSpec& world, const Pose& start, Vec2 goal,
                      int max_steps, const SimParams& params);

/// Observation and action column schema for M rays.
std::vector<Column> observation_columns(int n_rays);
std::vector<Column> action_columns();

/// Trajectories as a SampleSet (states = observation, actions = applied
/// action). With `with_log` the features carry x, y, heading, contact,
/// unsafe for every step.
SampleSet to_sample_set(std::span<const NavTrajectory> trajectories, int n_rays,
                        bool with_log = false, int first_id = 0);

}  // namespace sarp::nav
