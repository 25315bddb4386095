// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "exproj/analysis.hpp"
#include "exproj/io.hpp"
#include "exproj/solvers.hpp"

namespace exproj {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNotConverged = 3;

ScenarioConfig load_with_overrides(const RunManifest& m) {
  ScenarioConfig cfg = load_scenario_file(m.scenario_path);
  if (m.dt) cfg.dt = *m.dt;
  cfg = cfg.with_time_of_flight(m.tf.value_or(cfg.tf));
  if (m.gamma) cfg.gamma = *m.gamma;
  if (m.penalty_rho) cfg.penalty_rho = *m.penalty_rho;
  if (m.max_iters) cfg.max_iters = *m.max_iters;
  cfg.validate();
  return cfg;
}

FeasibilityTolerances tolerances(const RunManifest& m, const ScenarioConfig& cfg) {
  FeasibilityTolerances t = FeasibilityTolerances::defaults(cfg);
  if (m.tol_thrust) t.thrust = *m.tol_thrust;
  if (m.tol_pointing) t.pointing = *m.tol_pointing;
  if (m.tol_position) t.position = *m.tol_position;
  if (m.tol_velocity) t.velocity = *m.tol_velocity;
  if (m.tol_mass) t.mass = *m.tol_mass;
  if (m.tol_defect) t.defect = *m.tol_defect;
  return t;
}

std::filesystem::path ensure_out_dir(const RunManifest& m) {
  std::filesystem::path dir(m.out_dir.empty() ? "." : m.out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

int exit_code(const SolveResult& res, const FeasibilityReport& rep) {
  if (!res.converged) return kExitNotConverged;
  return rep.feasible ? kExitOk : kExitInfeasible;
}

std::vector<std::string> selected_solvers(const std::string& solver) {
  if (solver == "both") return {"lcvx", "exproj"};
  if (solver == "exproj" || solver == "lcvx") return {solver};
  throw std::invalid_argument("unknown solver '" + solver + "'");
}

SolveResult run_solver(const std::string& name, const ScenarioConfig& cfg) {
  return name == "exproj" ? solve_exproj(cfg) : solve_lcvx(cfg);
}

int write_solver_artifacts(const SolveResult& res, const ScenarioConfig& cfg,
                           const FeasibilityTolerances& tol,
                           const std::filesystem::path& dir) {
  const FeasibilityReport rep = check_feasibility(res.trajectory, cfg, tol);
  write_trajectory_csv((dir / ("trajectory_" + res.solver + ".csv")).string(),
                       res.trajectory);
  write_json((dir / ("result_" + res.solver + ".json")).string(), to_json(res));
  write_json((dir / ("report_" + res.solver + ".json")).string(), to_json(rep));
  std::cout << res.solver << ": " << (res.converged ? "converged" : "not converged")
            << " in " << res.iterations << " iterations, fuel " << std::setprecision(6)
            << res.fuel << " kg, " << (rep.feasible ? "feasible" : "INFEASIBLE")
            << "\n";
  return exit_code(res, rep);
}

int guarded(const char* what, int (*body)(const RunManifest&), const RunManifest& m) {
  try {
    return body(m);
  } catch (const std::exception& e) {
    std::cerr << what << ": " << e.what() << "\n";
    return kExitError;
  }
}

int do_solve(const RunManifest& m) {
  const ScenarioConfig cfg = load_with_overrides(m);
  const FeasibilityTolerances tol = tolerances(m, cfg);
  const auto dir = ensure_out_dir(m);
  int worst = kExitOk;
  for (const auto& name : selected_solvers(m.solver)) {
    const SolveResult res = run_solver(name, cfg);
    worst = std::max(worst, write_solver_artifacts(res, cfg, tol, dir));
  }
  return worst;
}

int do_compare(const RunManifest& m) {
  const ScenarioConfig cfg = load_with_overrides(m);
  const FeasibilityTolerances tol = tolerances(m, cfg);
  const auto dir = ensure_out_dir(m);

  const SolveResult lcvx = solve_lcvx(cfg);
  const SolveResult exproj = solve_exproj(cfg);
  const int code_a = write_solver_artifacts(lcvx, cfg, tol, dir);
  const int code_b = write_solver_artifacts(exproj, cfg, tol, dir);

  const Comparison cmp = compare(lcvx, exproj, cfg, tol);
  write_json((dir / "comparison.json").string(), to_json(cmp));

  auto vec = [](const Eigen::Vector3d& v) {
    std::ostringstream ss;
    ss << std::setprecision(6) << "(" << v.x() << ", " << v.y() << ", " << v.z() << ")";
    return ss.str();
  };
  std::cout << std::setprecision(6);
  std::cout << "\n                      " << std::setw(24) << cmp.a.solver
            << std::setw(24) << cmp.b.solver << "\n";
  std::cout << "terminal r [m]        " << std::setw(24) << vec(cmp.a.terminal_position)
            << std::setw(24) << vec(cmp.b.terminal_position) << "\n";
  std::cout << "terminal v [m/s]      " << std::setw(24) << vec(cmp.a.terminal_velocity)
            << std::setw(24) << vec(cmp.b.terminal_velocity) << "\n";
  std::cout << "fuel [kg]             " << std::setw(24) << cmp.a.fuel << std::setw(24)
            << cmp.b.fuel << "\n";
  std::cout << "feasible              " << std::setw(24)
            << (cmp.a.feasible ? "yes" : "no") << std::setw(24)
            << (cmp.b.feasible ? "yes" : "no") << "\n";

  return std::max(code_a, code_b);
}

int do_sweep(const RunManifest& m) {
  if (!(m.t_lo <= m.t_hi) || m.t_lo <= 0.0)
    throw std::invalid_argument("sweep needs 0 < t_lo <= t_hi");
  const ScenarioConfig cfg = load_with_overrides(m);
  const FeasibilityTolerances tol = tolerances(m, cfg);
  const auto dir = ensure_out_dir(m);

  TfSearchResult sr;
  try {
    sr = search_optimal_tf(cfg, m.t_lo, m.t_hi, tol);
  } catch (const std::runtime_error& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kExitInfeasible;
  }

  std::ofstream csv(dir / "sweep.csv");
  csv << std::setprecision(17);
  csv << "tf,fuel,feasible,converged,min_thrust,max_thrust\n";
  for (const auto& row : sr.rows)
    csv << row.tf << ',' << row.fuel << ',' << (row.feasible ? 1 : 0) << ','
        << (row.converged ? 1 : 0) << ',' << row.min_thrust << ',' << row.max_thrust
        << "\n";
  write_json((dir / "sweep.json").string(),
             nlohmann::json{{"tf_star", sr.tf_star}, {"fuel_star", sr.fuel_star}});
  std::cout << std::setprecision(6) << "tf_star = " << sr.tf_star
            << " s, fuel = " << sr.fuel_star << " kg\n";
  return kExitOk;
}

int do_check(const RunManifest& m) {
  const ScenarioConfig base = load_scenario_file(m.scenario_path);
  const Trajectory traj = read_trajectory_csv(m.trajectory_path);
  ScenarioConfig cfg = base;
  cfg.dt = traj.dt;
  cfg.tf = traj.dt * traj.steps();
  cfg.validate();
  const FeasibilityTolerances tol = tolerances(m, cfg);
  const FeasibilityReport rep = check_feasibility(traj, cfg, tol);
  const auto dir = ensure_out_dir(m);
  write_json((dir / "report.json").string(), to_json(rep));
  std::cout << to_json(rep).dump(2) << "\n";
  return rep.feasible ? kExitOk : kExitInfeasible;
}

}  // namespace

int cmd_solve(const RunManifest& m) { return guarded("solve", do_solve, m); }
int cmd_compare(const RunManifest& m) { return guarded("compare", do_compare, m); }
int cmd_sweep(const RunManifest& m) { return guarded("sweep", do_sweep, m); }
int cmd_check(const RunManifest& m) { return guarded("check", do_check, m); }

}  // namespace exproj
