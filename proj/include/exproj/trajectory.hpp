// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "exproj/scenario.hpp"

namespace exproj {

/// Per-step trajectory in the units of the scenario it was unpacked with.
/// States r, v, m, z have N+1 samples (i = 0..N); controls u, sigma and the
/// reconstructed thrust T = exp(z_i) * u_i have N (start-of-step mass
/// convention).
struct Trajectory {
  double dt = 0.0;
  Eigen::Matrix3Xd r;  // position, N+1 columns
  Eigen::Matrix3Xd v;  // velocity, N+1 columns
  Eigen::VectorXd m;   // mass, N+1
  Eigen::VectorXd z;   // log mass, N+1
  Eigen::Matrix3Xd u;  // thrust acceleration, N columns
  Eigen::VectorXd sigma;
  Eigen::Matrix3Xd T;  // thrust force, N columns

  int steps() const { return static_cast<int>(sigma.size()); }
  double time(int i) const { return dt * i; }
  double thrust_mag(int i) const { return T.col(i).norm(); }
  /// Angle of T_i from the vertical axis e1, in radians. Zero for zero thrust.
  double tilt(int i) const;
};

/// Unpacks a stacked decision vector (layout: [u_i, x_{i+1}, sigma_i,
/// z_{i+1}] per step) into a trajectory, prepending the initial state and
/// z_0 = log(m_wet) from the scenario.
Trajectory unpack(const Eigen::VectorXd& y, const ScenarioConfig& cfg);

/// Inverse of unpack: rebuilds the stacked vector from a trajectory.
Eigen::VectorXd pack(const Trajectory& traj);

/// Unit conversions between a normalized trajectory and physical units.
Trajectory to_physical(const Trajectory& traj, const Scaling& s);
Trajectory to_normalized(const Trajectory& traj, const Scaling& s);

}  // namespace exproj
