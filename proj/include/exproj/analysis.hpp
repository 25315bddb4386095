// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "exproj/solvers.hpp"
#include "exproj/trajectory.hpp"

namespace exproj {

/// Acceptance tolerances for the audit, in physical units.
struct FeasibilityTolerances {
  double thrust = 0.0;    // [N]
  double pointing = 0.0;  // [rad]
  double position = 0.0;  // [m]
  double velocity = 0.0;  // [m/s]
  double mass = 0.0;      // [kg]
  double defect = 0.0;    // [m]

  /// thrust 1e-3 * rho1, pointing 1e-6 rad, position 1e-2 m, velocity
  /// 1e-2 m/s, mass 1e-6 kg, defect 1e-6 m.
  static FeasibilityTolerances defaults(const ScenarioConfig& cfg);
};

/// Worst-case violations of the original nonconvex problem, measured in
/// physical units directly from (r, v, m, T). Independent of any solver
/// internals.
struct FeasibilityReport {
  double max_upper_thrust_violation = 0.0;  // [N]
  double max_lower_thrust_violation = 0.0;  // [N]
  double max_pointing_violation = 0.0;      // [rad]
  double terminal_position_error = 0.0;     // [m]
  double terminal_velocity_error = 0.0;     // [m/s]
  double mass_floor_violation = 0.0;        // [kg]
  double dynamics_defect = 0.0;             // [m], worst step of a re-simulation
  bool feasible = false;
};

FeasibilityReport check_feasibility(const Trajectory& traj, const ScenarioConfig& cfg,
                                    const FeasibilityTolerances& tol);
FeasibilityReport check_feasibility(const Trajectory& traj, const ScenarioConfig& cfg);

/// m_wet - m_N.
double fuel_consumed(const Trajectory& traj);

struct SweepRow {
  double tf = 0.0;
  double fuel = 0.0;
  bool feasible = false;
  bool converged = false;
  double min_thrust = 0.0;
  double max_thrust = 0.0;
};

struct TfSearchResult {
  double tf_star = 0.0;
  double fuel_star = 0.0;
  std::vector<SweepRow> rows;  // dt-grid scan, ascending tf
};

/// Scans [t_lo, t_hi] on the dt grid, solving the nonconvex problem at each
/// flight time and auditing the result; then refines around the best
/// feasible grid point by golden section (the fuel-vs-tf curve is assumed
/// unimodal near its minimum). Throws if no grid point is feasible.
TfSearchResult search_optimal_tf(const ScenarioConfig& cfg, double t_lo, double t_hi,
                                 const FeasibilityTolerances& tol, bool parallel = true);
TfSearchResult search_optimal_tf(const ScenarioConfig& cfg, double t_lo, double t_hi);

struct ComparisonSide {
  std::string solver;
  double fuel = 0.0;
  Eigen::Vector3d terminal_position = Eigen::Vector3d::Zero();
  Eigen::Vector3d terminal_velocity = Eigen::Vector3d::Zero();
  double min_thrust = 0.0;
  double max_thrust = 0.0;
  bool feasible = false;
  bool converged = false;
};

/// Side-by-side summary of two solves of the same scenario.
struct Comparison {
  double tf = 0.0;
  double dt = 0.0;
  int N = 0;
  ComparisonSide a;
  ComparisonSide b;
  double fuel_delta = 0.0;  // a.fuel - b.fuel
};

/// Errors if the two results were produced for different horizons.
Comparison compare(const SolveResult& a, const SolveResult& b,
                   const ScenarioConfig& cfg, const FeasibilityTolerances& tol);

}  // namespace exproj
