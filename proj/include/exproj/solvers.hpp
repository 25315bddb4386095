// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "exproj/admm.hpp"
#include "exproj/trajectory.hpp"

namespace exproj {

/// Outcome of one guidance solve, in physical units.
struct SolveResult {
  std::string solver;      // "exproj" or "lcvx"
  Trajectory trajectory;   // physical units
  bool converged = false;
  SolveStatus status = SolveStatus::MaxIters;
  int iterations = 0;
  double primal_residual = 0.0;  // nondimensional
  double dual_residual = 0.0;
  double objective = 0.0;  // nondimensional problem objective
  double fuel = 0.0;       // m_wet - m_N [kg]
  double tf = 0.0;         // [s]
  double dt = 0.0;         // [s]
  int N = 0;
  std::vector<std::pair<double, double>> history;
};

struct SolveOptions {
  bool record_history = false;
  bool parallel = true;
  const Trajectory* warm_start = nullptr;  // physical units
};

/// Reference log-mass profile z_ref(t) = log(m_wet - alpha rho2 t) sampled
/// at the step starts, with the per-step linear thrust-bound coefficients
/// a = rho * exp(-z_ref) derived from it.
struct LcvxReference {
  Eigen::VectorXd z_ref;  // N samples
  Eigen::VectorXd a1;     // rho1 * exp(-z_ref_i)
  Eigen::VectorXd a2;     // rho2 * exp(-z_ref_i)
};

/// Errors if the reference mass would reach zero within the horizon.
LcvxReference build_lcvx_reference(const ScenarioConfig& cfg);

/// Convex variant of the stacked problem: cost dt * sum(sigma_i) plus the
/// terminal soft constraint, band constraints replaced by the two
/// linearized rows per step appended to P, and no band selection block.
ProblemMatrices assemble_lcvx(const ScenarioConfig& cfg, const DiscreteDynamics& dyn,
                              const LcvxReference& ref);

/// Nonconvex solve: cone-surface and exponential-band couplings handled by
/// direct projection.
SolveResult solve_exproj(const ScenarioConfig& cfg, const SolveOptions& opts = {});

/// Convex baseline: relaxed cone plus linearized thrust bounds. The result
/// carries no feasibility guarantee for the original problem; audit it.
SolveResult solve_lcvx(const ScenarioConfig& cfg, const SolveOptions& opts = {});

}  // namespace exproj
