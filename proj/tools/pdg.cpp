// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line frontend: minimum-fuel powered-descent guidance solves,
// solver comparison, flight-time sweeps, and trajectory feasibility checks.

#include <CLI11.hpp>

#include "exproj/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Powered descent guidance solver (nonconvex splitting + convex baseline)"};
  app.require_subcommand(1);

  exproj::RunManifest manifest;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario = true) {
    cmd->add_option("--scenario", manifest.scenario_path, "Scenario file (key=value or JSON)")
        ->required(needs_scenario);
    cmd->add_option("--out", manifest.out_dir, "Output directory (created if missing)");
    cmd->add_option("--tf", manifest.tf, "Time of flight override [s]");
    cmd->add_option("--dt", manifest.dt, "Sampling interval override [s]");
    cmd->add_option("--gamma", manifest.gamma, "Terminal soft-constraint weight");
    cmd->add_option("--penalty-rho", manifest.penalty_rho, "Splitting penalty parameter");
    cmd->add_option("--max-iters", manifest.max_iters, "Iteration cap");
    cmd->add_option("--tol-thrust", manifest.tol_thrust, "Thrust-bound audit tolerance [N]");
    cmd->add_option("--tol-pointing", manifest.tol_pointing, "Pointing audit tolerance [rad]");
    cmd->add_option("--tol-position", manifest.tol_position, "Landing position tolerance [m]");
    cmd->add_option("--tol-velocity", manifest.tol_velocity, "Landing velocity tolerance [m/s]");
    cmd->add_option("--tol-mass", manifest.tol_mass, "Dry-mass floor tolerance [kg]");
    cmd->add_option("--tol-defect", manifest.tol_defect, "Re-simulation defect tolerance [m]");
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve one scenario and export artifacts");
  add_common(solve);
  solve->add_option("--solver", manifest.solver, "exproj | lcvx | both")
      ->check(CLI::IsMember({"exproj", "lcvx", "both"}));

  CLI::App* cmp = app.add_subcommand("compare", "Run both solvers and tabulate results");
  add_common(cmp);

  CLI::App* sweep = app.add_subcommand("sweep", "Locate the fuel-optimal time of flight");
  add_common(sweep);
  sweep->add_option("--t-lo", manifest.t_lo, "Bracket lower bound [s]")->required();
  sweep->add_option("--t-hi", manifest.t_hi, "Bracket upper bound [s]")->required();

  CLI::App* check = app.add_subcommand("check", "Audit a trajectory CSV against a scenario");
  add_common(check);
  check->add_option("--trajectory", manifest.trajectory_path, "Trajectory CSV to audit")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    manifest.subcommand = "solve";
    return exproj::cmd_solve(manifest);
  }
  if (cmp->parsed()) {
    manifest.subcommand = "compare";
    return exproj::cmd_compare(manifest);
  }
  if (sweep->parsed()) {
    manifest.subcommand = "sweep";
    return exproj::cmd_sweep(manifest);
  }
  manifest.subcommand = "check";
  return exproj::cmd_check(manifest);
}
