// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "exproj/problem.hpp"
#include "exproj/projections.hpp"
#include "exproj/scenario.hpp"

namespace exproj {

/// Which coupling the (u_i, sigma_i) blocks obey.
enum class ConeMode {
  Surface,  // ||u|| = sigma (nonconvex)
  Relaxed,  // ||u|| <= sigma (convex)
};

/// Blockwise projection of the stacked splitting variable. The argument
/// vector is laid out as [w1 | w2 | w3]: n_cone 4-blocks (u_i, sigma_i),
/// then the thrust-band slots (a single sigma_0 slot carrying the -z0
/// offset, followed by n_band (sigma_i, z_i) pairs), then n_ineq
/// nonnegativity entries.
///
/// Blocks are independent, so the parallel kernel partitions them across
/// threads and produces bitwise-identical output to the serial reference.
struct Projector {
  ConeMode cone_mode = ConeMode::Surface;
  int n_cone = 0;
  bool sigma0_slot = false;
  int n_band = 0;
  int n_ineq = 0;
  double z0 = 0.0;    // fixed initial log mass (sets the sigma_0 interval)
  double rho1 = 0.0;  // thrust-band bounds, in the assembly units
  double rho2 = 0.0;
  double nr_tol = 1e-12;
  int nr_max_iters = 50;
  bool parallel = true;

  /// Nonconvex configuration: cone surface + exponential band + positive part.
  static Projector exproj(const ScenarioConfig& cfg, const ProblemMatrices& mat);
  /// Convex configuration: solid cone + positive part (band rows are
  /// linearized into the inequality block by the frontend).
  static Projector lcvx(const ScenarioConfig& cfg, const ProblemMatrices& mat);

  int dim() const {
    return 4 * n_cone + (sigma0_slot ? 1 : 0) + 2 * n_band + n_ineq;
  }

  /// out = blockwise projection of arg; dispatches on `parallel`.
  void apply(const Eigen::VectorXd& arg, Eigen::VectorXd& out) const;

  /// Serial reference implementation.
  void apply_serial(const Eigen::VectorXd& arg, Eigen::VectorXd& out) const;

  /// OpenMP kernel; identical results to apply_serial.
  void apply_parallel(const Eigen::VectorXd& arg, Eigen::VectorXd& out) const;

 private:
  void apply_block(int block, const Eigen::VectorXd& arg, Eigen::VectorXd& out) const;
  int blocks() const { return n_cone + (sigma0_slot ? 1 : 0) + n_band; }
};

}  // namespace exproj
