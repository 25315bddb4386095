// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

namespace exproj {

/// One CLI invocation, fully resolved. The solvers are deterministic, so a
/// manifest pins a run completely (no seeds involved).
struct RunManifest {
  std::string subcommand;  // solve | compare | sweep | check
  std::string scenario_path;
  std::string solver = "exproj";  // exproj | lcvx | both
  std::string out_dir = ".";
  std::string trajectory_path;  // check only

  std::optional<double> tf;
  std::optional<double> dt;
  std::optional<double> gamma;
  std::optional<double> penalty_rho;
  std::optional<int> max_iters;

  std::optional<double> tol_thrust;
  std::optional<double> tol_pointing;
  std::optional<double> tol_position;
  std::optional<double> tol_velocity;
  std::optional<double> tol_mass;
  std::optional<double> tol_defect;

  double t_lo = 0.0;  // sweep only
  double t_hi = 0.0;
};

// Exit codes: 0 converged and feasible, 1 usage/IO/scenario error,
// 2 converged but infeasible against the original problem, 3 not converged.
int cmd_solve(const RunManifest& manifest);
int cmd_compare(const RunManifest& manifest);
int cmd_sweep(const RunManifest& manifest);
int cmd_check(const RunManifest& manifest);

}  // namespace exproj
