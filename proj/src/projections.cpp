// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/projections.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace exproj {

ConePoint project_cone_surface(const ConePoint& p) {
  const double n = p.u.norm();
  if (p.sigma == n) return p;
  if (p.sigma <= -n) return {Eigen::Vector3d::Zero(), 0.0};
  if (n == 0.0) {
    // Apex case: every direction is optimal, pick e1.
    return {0.5 * p.sigma * Eigen::Vector3d::UnitX(), 0.5 * p.sigma};
  }
  const double half = 0.5 * (n + p.sigma);
  return {(half / n) * p.u, half};
}

ConePoint project_cone(const ConePoint& p) {
  const double n = p.u.norm();
  if (n <= p.sigma) return p;
  if (p.sigma <= -n) return {Eigen::Vector3d::Zero(), 0.0};
  const double half = 0.5 * (n + p.sigma);
  return {(half / n) * p.u, half};
}

namespace {

// Residual of the perpendicular-foot condition and squared distance from
// (z, sigma) to the curve point (t, rho e^{-t}).
double foot_residual(double t, double z, double sigma, double rho) {
  return std::exp(t) * (t - z) - rho * rho * std::exp(-t) + rho * sigma;
}

double foot_residual_deriv(double t, double z, double rho) {
  return std::exp(t) * (1.0 + t - z) + rho * rho * std::exp(-t);
}

double curve_dist2(double t, double z, double sigma, double rho) {
  const double dz = t - z;
  const double ds = rho * std::exp(-t) - sigma;
  return dz * dz + ds * ds;
}

// Roundoff floor of the residual evaluation near t. The residual mixes
// terms of magnitude e^t and rho^2 e^{-t}, and moving t by one ulp moves it
// by about |f'(t)| * |t| * eps, so for far-out arguments the requested
// absolute tolerance can be unattainable in double arithmetic; convergence
// is declared at this floor instead.
double residual_floor(double t, double z, double sigma, double rho) {
  const double scale = std::exp(t) * (1.0 + std::abs(t - z)) +
                       rho * rho * std::exp(-t) + rho * std::abs(sigma);
  return 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)) *
         scale;
}

// Bisection-safeguarded Newton on a sign-change bracket f(lo) <= 0 <= f(hi).
RootResult polish_root(double lo, double hi, double z, double sigma, double rho,
                       double tol, int max_iters) {
  double t = 0.5 * (lo + hi);
  for (int it = 1; it <= max_iters; ++it) {
    const double f = foot_residual(t, z, sigma, rho);
    if (std::abs(f) <= std::max(tol, residual_floor(t, z, sigma, rho)))
      return {t, it};
    if (f < 0.0)
      lo = t;
    else
      hi = t;
    const double d = foot_residual_deriv(t, z, rho);
    double next = t - f / d;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    t = next;
  }
  throw std::runtime_error("newton_exp_root: no convergence within max_iters");
}

}  // namespace

RootResult newton_exp_root(double z, double sigma, double rho, double tol,
                           int max_iters) {
  assert(rho > 0.0 && tol > 0.0);

  // All stationary points lie between the horizontal foot t = z and the
  // vertical foot t = log(rho/sigma); for sigma <= 0 the latter does not
  // exist and the root sits to the right of z, found by doubling.
  double a, b;
  if (sigma > 0.0) {
    const double tv = std::log(rho / sigma);
    a = std::min(z, tv);
    b = std::max(z, tv);
  } else {
    a = z;
    double step = 1.0;
    b = z + step;
    while (foot_residual(b, z, sigma, rho) < 0.0) {
      step *= 2.0;
      b = z + step;
    }
  }
  if (std::abs(foot_residual(a, z, sigma, rho)) <=
      std::max(tol, residual_floor(a, z, sigma, rho)))
    return {a, 0};
  if (std::abs(foot_residual(b, z, sigma, rho)) <=
      std::max(tol, residual_floor(b, z, sigma, rho)))
    return {b, 0};

  // Coarse sign scan. Between the curve and its evolute the residual is
  // monotone (single crossing); far on the nonconvex side it can cross
  // three times, giving two candidate feet to compare.
  constexpr int kScan = 32;
  double prev_t = a;
  double prev_f = foot_residual(a, z, sigma, rho);
  RootResult best{};
  double best_d2 = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= kScan; ++k) {
    const double tk = a + (b - a) * (static_cast<double>(k) / kScan);
    const double fk = foot_residual(tk, z, sigma, rho);
    if (prev_f <= 0.0 && fk > 0.0) {  // descending-to-ascending: a local minimum
      const RootResult r = polish_root(prev_t, tk, z, sigma, rho, tol, max_iters);
      const double d2 = curve_dist2(r.t, z, sigma, rho);
      if (d2 < best_d2) {
        best_d2 = d2;
        best = r;
      }
    }
    prev_t = tk;
    prev_f = fk;
  }
  if (!std::isfinite(best_d2)) {
    // Roundoff pushed the crossing outside the scan; fall back to the
    // whole bracket, which has f(a) <= 0 <= f(b) by construction.
    return polish_root(a, b, z, sigma, rho, tol, max_iters);
  }
  return best;
}

BandPoint project_exp_band(const BandPoint& p, double rho1, double rho2,
                           double tol, int max_iters) {
  assert(0.0 < rho1 && rho1 < rho2);
  const double lo = rho1 * std::exp(-p.z);
  const double hi = rho2 * std::exp(-p.z);
  if (p.sigma >= lo && p.sigma <= hi) return p;
  const double rho = p.sigma < lo ? rho1 : rho2;
  const double t = newton_exp_root(p.z, p.sigma, rho, tol, max_iters).t;
  return {t, rho * std::exp(-t)};
}

double project_interval(double sigma, double lo, double hi) {
  assert(lo <= hi);
  return std::clamp(sigma, lo, hi);
}

Eigen::VectorXd project_nonneg(const Eigen::VectorXd& v) {
  return v.cwiseMax(0.0);
}

}  // namespace exproj
