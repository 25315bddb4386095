// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace exproj {

DiscreteDynamics discretize(const ScenarioConfig& cfg) {
  const double dt = cfg.dt;
  const int n = static_cast<int>(std::lround(cfg.tf / dt));
  if (n < 2 || std::abs(cfg.tf - n * dt) > 1e-9 * dt)
    throw std::invalid_argument("tf must be an integer multiple of dt (N >= 2)");

  DiscreteDynamics dyn;
  dyn.N = n;
  dyn.A.setIdentity();
  dyn.A.topRightCorner<3, 3>() = dt * Eigen::Matrix3d::Identity();
  dyn.B.setZero();
  dyn.B.topRows<3>() = 0.5 * dt * dt * Eigen::Matrix3d::Identity();
  dyn.B.bottomRows<3>() = dt * Eigen::Matrix3d::Identity();
  dyn.c.head<3>() = 0.5 * dt * dt * cfg.g;
  dyn.c.tail<3>() = dt * cfg.g;
  dyn.mass_step = cfg.alpha * dt;
  return dyn;
}

}  // namespace exproj
