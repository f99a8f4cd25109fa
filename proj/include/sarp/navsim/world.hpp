#pragma once

#include "sarp/navsim/geometry.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sarp::nav {

/// Robot pose; heading in (-pi, pi].
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;

  Vec2 position() const { return {x, y}; }
  bool operator==(const Pose&) const = default;
};
using RobotState = Pose;

struct Bounds {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 1.0;
  double ymax = 1.0;

  bool contains(Vec2 p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
  bool operator==(const Bounds&) const = default;
};

struct WorldSpec {
  std::string name;
  std::vector<Segment> walls;
  std::vector<Pose> starts;
  std::vector<Vec2> goals;
  Bounds bounds;

  /// Throws ConfigError unless every start and goal lies inside the bounds
  /// and there is at least one of each.
  void validate() const;
  /// Distance from p to the nearest wall (infinity for an empty world).
  double clearance(Vec2 p) const;
  bool operator==(const WorldSpec&) const = default;
};

/// Simulator and sensor constants.
struct SimParams {
  double dt = 0.1;
  double r_max = 3.0;
  double fov = 6.283185307179586;
  int n_rays = 10;
  double goal_radius = 0.3;
  double v_min = 0.0;
  double v_max = 1.2;
  double omega_max = 1.5;
  double contact_radius = 0.1;       ///< robot body radius used for contact
  double collision_threshold = 0.3;  ///< detect_collision threshold on ranges

  void validate() const;
  bool operator==(const SimParams&) const = default;
};

/// Narrow corridor with four wards on a 12 x 8 m floor, 2 starts and 6 goals.
WorldSpec mini_hospital();

void to_json(nlohmann::json& j, const WorldSpec& w);
void from_json(const nlohmann::json& j, WorldSpec& w);
void to_json(nlohmann::json& j, const SimParams& p);
void from_json(const nlohmann::json& j, SimParams& p);

}  // namespace sarp::nav
