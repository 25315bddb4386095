// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exproj/problem.hpp"

namespace exproj {

double Trajectory::tilt(int i) const {
  const double mag = T.col(i).norm();
  if (mag == 0.0) return 0.0;
  const double c = std::clamp(T(0, i) / mag, -1.0, 1.0);
  return std::acos(c);
}

Trajectory unpack(const Eigen::VectorXd& y, const ScenarioConfig& cfg) {
  const int N = cfg.horizon();
  const Layout layout{N};
  if (y.size() != layout.dim())
    throw std::invalid_argument("unpack: y has wrong dimension for this scenario");

  Trajectory traj;
  traj.dt = cfg.dt;
  traj.r.resize(3, N + 1);
  traj.v.resize(3, N + 1);
  traj.m.resize(N + 1);
  traj.z.resize(N + 1);
  traj.u.resize(3, N);
  traj.sigma.resize(N);
  traj.T.resize(3, N);

  traj.r.col(0) = cfg.r_init;
  traj.v.col(0) = cfg.v_init;
  traj.z(0) = std::log(cfg.m_wet);
  traj.m(0) = cfg.m_wet;

  for (int i = 0; i < N; ++i) {
    traj.u.col(i) = y.segment<3>(layout.u(i));
    traj.sigma(i) = y(layout.sigma(i));
    traj.r.col(i + 1) = y.segment<3>(layout.x(i));
    traj.v.col(i + 1) = y.segment<3>(layout.x(i) + 3);
    traj.z(i + 1) = y(layout.z(i));
    traj.m(i + 1) = std::exp(traj.z(i + 1));
    traj.T.col(i) = traj.m(i) * traj.u.col(i);
  }
  return traj;
}

Eigen::VectorXd pack(const Trajectory& traj) {
  const int N = traj.steps();
  const Layout layout{N};
  Eigen::VectorXd y(layout.dim());
  for (int i = 0; i < N; ++i) {
    y.segment<3>(layout.u(i)) = traj.u.col(i);
    y.segment<3>(layout.x(i)) = traj.r.col(i + 1);
    y.segment<3>(layout.x(i) + 3) = traj.v.col(i + 1);
    y(layout.sigma(i)) = traj.sigma(i);
    y(layout.z(i)) = traj.z(i + 1);
  }
  return y;
}

namespace {

Trajectory rescale(const Trajectory& traj, double len, double time, double mass) {
  Trajectory out;
  const double acc = len / (time * time);
  out.dt = traj.dt * time;
  out.r = traj.r * len;
  out.v = traj.v * (len / time);
  out.m = traj.m * mass;
  out.z = traj.z.array() + std::log(mass);
  out.u = traj.u * acc;
  out.sigma = traj.sigma * acc;
  out.T = traj.T * (mass * acc);
  return out;
}

}  // namespace

Trajectory to_physical(const Trajectory& traj, const Scaling& s) {
  return rescale(traj, s.length, s.time, s.mass);
}

Trajectory to_normalized(const Trajectory& traj, const Scaling& s) {
  return rescale(traj, 1.0 / s.length, 1.0 / s.time, 1.0 / s.mass);
}

}  // namespace exproj
