// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

namespace exproj {

/// A (thrust acceleration, slack) pair subject to the cone coupling.
struct ConePoint {
  Eigen::Vector3d u;
  double sigma = 0.0;
};

/// A (log mass, slack) pair subject to the exponential thrust band.
struct BandPoint {
  double z = 0.0;
  double sigma = 0.0;
};

/// Euclidean projection onto the *surface* of the second-order cone,
/// { (u, sigma) : ||u|| = sigma }. The set is nonconvex; projections from
/// the cone's interior can be expansive. The apex-degenerate input (u = 0,
/// sigma > 0) maps to (sigma/2 * e1, sigma/2) with the fixed direction e1
/// so results stay reproducible.
ConePoint project_cone_surface(const ConePoint& p);

/// Euclidean projection onto the solid second-order cone
/// { (u, sigma) : ||u|| <= sigma } (convex, nonexpansive).
ConePoint project_cone(const ConePoint& p);

struct RootResult {
  double t = 0.0;
  int iterations = 0;  // Newton/bisection steps spent on the returned root
};

/// Solves e^t (t - z) - rho^2 e^{-t} + rho * sigma = 0, the stationarity
/// condition for the foot of the perpendicular from (z, sigma) onto the
/// curve sigma = rho * e^{-t}. From the nonconvex side the residual can
/// have several roots (several perpendicular feet); the one closest to
/// (z, sigma) is returned. Roots are isolated by a coarse sign scan over
/// the bracket that provably contains all of them, then polished with a
/// bisection-safeguarded Newton iteration using the derivative
/// e^t (1 + t - z) + rho^2 e^{-t}.
///
/// Throws std::runtime_error if the residual does not reach tol within
/// max_iters steps.
RootResult newton_exp_root(double z, double sigma, double rho, double tol,
                           int max_iters);

/// Euclidean projection onto the exponential band
/// { (z, sigma) : rho1 e^{-z} <= sigma <= rho2 e^{-z} }. Interior points
/// (boundary included) are returned unchanged; points below the band land
/// on the lower curve, points above on the upper curve, at the foot
/// computed by newton_exp_root.
BandPoint project_exp_band(const BandPoint& p, double rho1, double rho2,
                           double tol = 1e-12, int max_iters = 50);

/// clamp(sigma, lo, hi). Requires lo <= hi.
double project_interval(double sigma, double lo, double hi);

/// Componentwise positive part.
Eigen::VectorXd project_nonneg(const Eigen::VectorXd& v);

}  // namespace exproj
