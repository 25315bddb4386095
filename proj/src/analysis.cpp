// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "exproj/dynamics.hpp"

namespace exproj {

FeasibilityTolerances FeasibilityTolerances::defaults(const ScenarioConfig& cfg) {
  FeasibilityTolerances t;
  t.thrust = 1e-3 * cfg.rho1;
  t.pointing = 1e-6;
  t.position = 1e-2;
  t.velocity = 1e-2;
  t.mass = 1e-6;
  t.defect = 1e-6;
  return t;
}

FeasibilityReport check_feasibility(const Trajectory& traj, const ScenarioConfig& cfg,
                                    const FeasibilityTolerances& tol) {
  const int N = traj.steps();
  if (N != cfg.horizon())
    throw std::invalid_argument("check_feasibility: trajectory horizon mismatch");

  FeasibilityReport rep;
  for (int i = 0; i < N; ++i) {
    const double mag = traj.thrust_mag(i);
    rep.max_upper_thrust_violation =
        std::max(rep.max_upper_thrust_violation, mag - cfg.rho2);
    rep.max_lower_thrust_violation =
        std::max(rep.max_lower_thrust_violation, cfg.rho1 - mag);
    if (mag > 0.0)
      rep.max_pointing_violation =
          std::max(rep.max_pointing_violation, traj.tilt(i) - cfg.theta_tp);
  }
  rep.max_upper_thrust_violation = std::max(rep.max_upper_thrust_violation, 0.0);
  rep.max_lower_thrust_violation = std::max(rep.max_lower_thrust_violation, 0.0);
  rep.max_pointing_violation = std::max(rep.max_pointing_violation, 0.0);

  rep.terminal_position_error = traj.r.col(N).norm();
  rep.terminal_velocity_error = traj.v.col(N).norm();
  rep.mass_floor_violation = std::max(0.0, cfg.m_dry - traj.m(N));

  // Re-simulate from the initial state with the trajectory's own controls
  // (u_i recovered as T_i / m_i) and take the worst position deviation.
  {
    ScenarioConfig sim_cfg = cfg;
    sim_cfg.dt = traj.dt;
    sim_cfg.tf = traj.dt * N;
    const DiscreteDynamics dyn = discretize(sim_cfg);
    Eigen::Matrix<double, 6, 1> x;
    x << cfg.r_init, cfg.v_init;
    for (int i = 0; i < N; ++i) {
      const Eigen::Vector3d u_i = traj.T.col(i) / traj.m(i);
      x = dyn.A * x + dyn.B * u_i + dyn.c;
      const double defect = (x.head<3>() - traj.r.col(i + 1)).norm();
      rep.dynamics_defect = std::max(rep.dynamics_defect, defect);
    }
  }

  rep.feasible = rep.max_upper_thrust_violation <= tol.thrust &&
                 rep.max_lower_thrust_violation <= tol.thrust &&
                 rep.max_pointing_violation <= tol.pointing &&
                 rep.terminal_position_error <= tol.position &&
                 rep.terminal_velocity_error <= tol.velocity &&
                 rep.mass_floor_violation <= tol.mass &&
                 rep.dynamics_defect <= tol.defect;
  return rep;
}

FeasibilityReport check_feasibility(const Trajectory& traj, const ScenarioConfig& cfg) {
  return check_feasibility(traj, cfg, FeasibilityTolerances::defaults(cfg));
}

double fuel_consumed(const Trajectory& traj) {
  return traj.m(0) - traj.m(traj.steps());
}

namespace {

SweepRow evaluate_tf(const ScenarioConfig& cfg, double tf,
                     const FeasibilityTolerances& tol) {
  const ScenarioConfig cfg_tf = cfg.with_time_of_flight(tf);
  SolveOptions opts;
  opts.parallel = false;  // the sweep itself fans out
  const SolveResult res = solve_exproj(cfg_tf, opts);
  const FeasibilityReport rep = check_feasibility(res.trajectory, cfg_tf, tol);
  SweepRow row;
  row.tf = tf;
  row.fuel = res.fuel;
  row.converged = res.converged;
  row.feasible = res.converged && rep.feasible;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int i = 0; i < res.trajectory.steps(); ++i) {
    lo = std::min(lo, res.trajectory.thrust_mag(i));
    hi = std::max(hi, res.trajectory.thrust_mag(i));
  }
  row.min_thrust = lo;
  row.max_thrust = hi;
  return row;
}

}  // namespace

TfSearchResult search_optimal_tf(const ScenarioConfig& cfg, double t_lo, double t_hi,
                                 const FeasibilityTolerances& tol, bool parallel) {
  if (t_lo > t_hi)
    throw std::invalid_argument("search_optimal_tf: t_lo must not exceed t_hi");

  TfSearchResult out;
  const double dt = cfg.dt;
  const int count = 1 + static_cast<int>(std::floor((t_hi - t_lo) / dt + 1e-9));
  out.rows.resize(count);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int k = 0; k < count; ++k)
    out.rows[k] = evaluate_tf(cfg, t_lo + k * dt, tol);

  int best = -1;
  for (int k = 0; k < count; ++k)
    if (out.rows[k].feasible && (best < 0 || out.rows[k].fuel < out.rows[best].fuel))
      best = k;
  if (best < 0)
    throw std::runtime_error("search_optimal_tf: no feasible time of flight in bracket");

  // Golden-section refinement around the best grid point.
  double lo = std::max(t_lo, out.rows[best].tf - dt);
  double hi = std::min(t_hi, out.rows[best].tf + dt);
  double best_tf = out.rows[best].tf;
  double best_fuel = out.rows[best].fuel;
  auto fuel_at = [&](double tf) {
    const SweepRow row = evaluate_tf(cfg, tf, tol);
    if (row.feasible && row.fuel < best_fuel) {
      best_fuel = row.fuel;
      best_tf = tf;
    }
    return row.feasible ? row.fuel : std::numeric_limits<double>::infinity();
  };
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = fuel_at(x1);
  double f2 = fuel_at(x2);
  while (hi - lo > dt / 4.0) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = fuel_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = fuel_at(x2);
    }
  }

  out.tf_star = best_tf;
  out.fuel_star = best_fuel;
  return out;
}

TfSearchResult search_optimal_tf(const ScenarioConfig& cfg, double t_lo, double t_hi) {
  return search_optimal_tf(cfg, t_lo, t_hi, FeasibilityTolerances::defaults(cfg));
}

Comparison compare(const SolveResult& a, const SolveResult& b,
                   const ScenarioConfig& cfg, const FeasibilityTolerances& tol) {
  if (a.N != b.N || std::abs(a.tf - b.tf) > 1e-9 * std::max(a.tf, b.tf))
    throw std::invalid_argument("compare: results come from different scenarios");

  auto side = [&](const SolveResult& r) {
    ComparisonSide s;
    s.solver = r.solver;
    s.fuel = r.fuel;
    const int n = r.trajectory.steps();
    s.terminal_position = r.trajectory.r.col(n);
    s.terminal_velocity = r.trajectory.v.col(n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < n; ++i) {
      lo = std::min(lo, r.trajectory.thrust_mag(i));
      hi = std::max(hi, r.trajectory.thrust_mag(i));
    }
    s.min_thrust = lo;
    s.max_thrust = hi;
    ScenarioConfig cfg_r = cfg;
    cfg_r.tf = r.tf;
    cfg_r.dt = r.dt;
    s.feasible = check_feasibility(r.trajectory, cfg_r, tol).feasible;
    s.converged = r.converged;
    return s;
  };

  Comparison cmp;
  cmp.tf = a.tf;
  cmp.dt = a.dt;
  cmp.N = a.N;
  cmp.a = side(a);
  cmp.b = side(b);
  cmp.fuel_delta = a.fuel - b.fuel;
  return cmp;
}

}  // namespace exproj
