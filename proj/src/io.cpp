// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace exproj {

namespace {

constexpr const char* kCsvHeader = "t,rx,ry,rz,vx,vy,vz,m,Tx,Ty,Tz,Tmag,sigma,tilt_deg";

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::Stalled: return "stalled";
    case SolveStatus::MaxIters: return "max_iters";
  }
  return "unknown";
}

}  // namespace

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << std::setprecision(17);
  out << kCsvHeader << "\n";
  const int N = traj.steps();
  for (int i = 0; i <= N; ++i) {
    out << traj.time(i) << ',' << traj.r(0, i) << ',' << traj.r(1, i) << ','
        << traj.r(2, i) << ',' << traj.v(0, i) << ',' << traj.v(1, i) << ','
        << traj.v(2, i) << ',' << traj.m(i);
    if (i < N) {
      out << ',' << traj.T(0, i) << ',' << traj.T(1, i) << ',' << traj.T(2, i) << ','
          << traj.thrust_mag(i) << ',' << traj.sigma(i) << ','
          << traj.tilt(i) * (180.0 / std::numbers::pi);
    } else {
      out << ",0,0,0,0,0,0";
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failure on '" + path + "'");
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trajectory file '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,", 0) != 0)
    throw std::runtime_error("'" + path + "' is not a trajectory CSV");

  std::vector<std::array<double, 14>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::array<double, 14> row{};
    std::istringstream ss(line);
    std::string cell;
    for (int c = 0; c < 14; ++c) {
      if (!std::getline(ss, cell, ','))
        throw std::runtime_error("short row in trajectory CSV");
      row[c] = std::stod(cell);
    }
    rows.push_back(row);
  }
  if (rows.size() < 2) throw std::runtime_error("trajectory CSV has too few rows");

  const int N = static_cast<int>(rows.size()) - 1;
  Trajectory traj;
  traj.dt = rows[1][0];
  traj.r.resize(3, N + 1);
  traj.v.resize(3, N + 1);
  traj.m.resize(N + 1);
  traj.z.resize(N + 1);
  traj.u.resize(3, N);
  traj.sigma.resize(N);
  traj.T.resize(3, N);
  for (int i = 0; i <= N; ++i) {
    traj.r.col(i) << rows[i][1], rows[i][2], rows[i][3];
    traj.v.col(i) << rows[i][4], rows[i][5], rows[i][6];
    traj.m(i) = rows[i][7];
    traj.z(i) = std::log(traj.m(i));
  }
  for (int i = 0; i < N; ++i) {
    traj.T.col(i) << rows[i][8], rows[i][9], rows[i][10];
    traj.sigma(i) = rows[i][12];
    traj.u.col(i) = traj.T.col(i) / traj.m(i);
  }
  return traj;
}

nlohmann::json to_json(const SolveResult& result) {
  nlohmann::json j{
      {"solver", result.solver},
      {"converged", result.converged},
      {"status", status_name(result.status)},
      {"iterations", result.iterations},
      {"primal_residual", result.primal_residual},
      {"dual_residual", result.dual_residual},
      {"objective", result.objective},
      {"fuel", result.fuel},
      {"tf", result.tf},
      {"dt", result.dt},
      {"N", result.N},
  };
  if (!result.history.empty()) {
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [p, d] : result.history) hist.push_back({p, d});
    j["history"] = std::move(hist);
  }
  return j;
}

nlohmann::json to_json(const FeasibilityReport& report) {
  return nlohmann::json{
      {"max_upper_thrust_violation", report.max_upper_thrust_violation},
      {"max_lower_thrust_violation", report.max_lower_thrust_violation},
      {"max_pointing_violation", report.max_pointing_violation},
      {"terminal_position_error", report.terminal_position_error},
      {"terminal_velocity_error", report.terminal_velocity_error},
      {"mass_floor_violation", report.mass_floor_violation},
      {"dynamics_defect", report.dynamics_defect},
      {"feasible", report.feasible},
  };
}

nlohmann::json to_json(const Comparison& cmp) {
  auto side = [](const ComparisonSide& s) {
    return nlohmann::json{
        {"solver", s.solver},
        {"fuel", s.fuel},
        {"terminal_position",
         {s.terminal_position.x(), s.terminal_position.y(), s.terminal_position.z()}},
        {"terminal_velocity",
         {s.terminal_velocity.x(), s.terminal_velocity.y(), s.terminal_velocity.z()}},
        {"min_thrust", s.min_thrust},
        {"max_thrust", s.max_thrust},
        {"feasible", s.feasible},
        {"converged", s.converged},
    };
  };
  return nlohmann::json{
      {"tf", cmp.tf},          {"dt", cmp.dt},
      {"N", cmp.N},            {"a", side(cmp.a)},
      {"b", side(cmp.b)},      {"fuel_delta", cmp.fuel_delta},
  };
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failure on '" + path + "'");
}

}  // namespace exproj
