// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "exproj/analysis.hpp"
#include "exproj/solvers.hpp"
#include "exproj/trajectory.hpp"

namespace exproj {

/// Writes the trajectory as CSV with header
///   t,rx,ry,rz,vx,vy,vz,m,Tx,Ty,Tz,Tmag,sigma,tilt_deg
/// and N+1 rows. Control columns of the final row are zero (no control
/// applies after the last step). All values are full precision so a
/// round-tripped file re-audits identically.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

/// Reads a file produced by write_trajectory_csv.
Trajectory read_trajectory_csv(const std::string& path);

nlohmann::json to_json(const SolveResult& result);
nlohmann::json to_json(const FeasibilityReport& report);
nlohmann::json to_json(const Comparison& cmp);

void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace exproj
