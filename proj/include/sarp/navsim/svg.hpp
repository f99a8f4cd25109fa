#pragma once

#include "sarp/navsim/sim.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>

namespace sarp::nav {

/// Top-down plot: walls, goals, one polyline per trajectory (green reached,
/// red collided, grey timeout) and a marker on every unsafe step.
void write_trajectories_svg(std::ostream& out, const WorldSpec& world,
                            std::span<const NavTrajectory> trajectories);
void save_trajectories_svg(const std::filesystem::path& path, const WorldSpec& world,
                           std::span<const NavTrajectory> trajectories);

}  // namespace sarp::nav
