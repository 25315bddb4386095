// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <Eigen/Core>

namespace exproj {

/// Physical and solver parameters for one powered-descent scenario.
///
/// Physical quantities are SI: meters, seconds, kilograms, newtons,
/// radians. Solver knobs (gamma, penalty_rho, tolerances) are expressed in
/// the solver's nondimensional units, see Scaling.
struct ScenarioConfig {
  Eigen::Vector3d r_init{Eigen::Vector3d::Zero()};  // initial position [m]
  Eigen::Vector3d v_init{Eigen::Vector3d::Zero()};  // initial velocity [m/s]
  Eigen::Vector3d g{Eigen::Vector3d::Zero()};       // gravity [m/s^2]
  double m_wet = 0.0;     // initial (wet) mass [kg]
  double m_dry = 0.0;     // structural (dry) mass [kg]
  double rho1 = 0.0;      // minimum thrust magnitude [N]
  double rho2 = 0.0;      // maximum thrust magnitude [N]
  double alpha = 0.0;     // mass-flow constant [s/m]
  double theta_tp = 0.0;  // max thrust pointing angle from vertical [rad]
  double tf = 46.96;      // time of flight [s]
  double dt = 1.0;        // sampling interval [s]

  double gamma = 500.0;       // terminal-state soft-constraint weight
  double penalty_rho = 1.0;   // splitting penalty parameter
  int max_iters = 20000;      // splitting iteration cap
  double eps_primal = 1e-6;   // primal residual tolerance (nondimensional)
  double eps_dual = 1e-6;     // dual residual tolerance (nondimensional)
  double nr_tol = 1e-12;      // Newton-Raphson residual tolerance
  int nr_max_iters = 50;      // Newton-Raphson iteration cap

  /// Horizon length N = tf/dt (validated to be an integer >= 2).
  int horizon() const;

  /// Throws std::invalid_argument naming the offending key.
  void validate() const;

  /// Same scenario with tf replaced and dt snapped to tf/N so that the
  /// horizon stays integral (N = round(tf/dt_old), at least 2).
  ScenarioConfig with_time_of_flight(double tf_new) const;
};

/// Parses a scenario from configuration text. Two encodings are accepted:
/// flat `key = value` lines (`#` comments, vectors comma- or
/// space-separated) and a JSON object with the same keys. Physical keys are
/// required; solver knobs fall back to their defaults.
ScenarioConfig load_scenario(const std::string& source);

/// load_scenario() applied to a file's contents.
ScenarioConfig load_scenario_file(const std::string& path);

/// Units used to nondimensionalize a scenario before solving: length by
/// max(||r_init||, 1), time by tf, mass by m_wet. All solver work happens
/// in these units; trajectories convert back on unpack.
struct Scaling {
  double length = 1.0;  // [m]
  double time = 1.0;    // [s]
  double mass = 1.0;    // [kg]

  static Scaling identity() { return {}; }
  static Scaling of(const ScenarioConfig& cfg);

  double accel() const { return length / (time * time); }
  double force() const { return mass * accel(); }

  /// The same scenario expressed in scaled units (m_wet becomes 1, tf
  /// becomes 1, gravity/thrust bounds become O(1) accelerations).
  ScenarioConfig normalize(const ScenarioConfig& cfg) const;
};

}  // namespace exproj
