// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "exproj/scenario.hpp"

namespace exproj {

/// Zero-order-hold discretization of the translational double integrator
/// r'' = g + u together with the log-mass recursion z' = -alpha*sigma. Both
/// are integrated exactly for inputs held constant over each step:
///
///   x_{i+1} = A x_i + B u_i + c,   x = [r; v]
///   z_{i+1} = z_i - mass_step * sigma_i
struct DiscreteDynamics {
  Eigen::Matrix<double, 6, 6> A;
  Eigen::Matrix<double, 6, 3> B;
  Eigen::Matrix<double, 6, 1> c;
  double mass_step = 0.0;  // alpha * dt
  int N = 0;               // horizon length
};

/// Errors if tf is not an integer multiple of dt (tolerance 1e-9 * dt).
DiscreteDynamics discretize(const ScenarioConfig& cfg);

}  // namespace exproj
