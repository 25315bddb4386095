// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/splitting.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace exproj {

Projector Projector::exproj(const ScenarioConfig& cfg, const ProblemMatrices& mat) {
  Projector p;
  p.cone_mode = ConeMode::Surface;
  p.n_cone = mat.layout.N;
  p.sigma0_slot = mat.n_w2() > 0;
  p.n_band = mat.layout.N - 1;
  p.n_ineq = mat.n_ineq();
  p.z0 = mat.z0;
  p.rho1 = cfg.rho1;
  p.rho2 = cfg.rho2;
  p.nr_tol = cfg.nr_tol;
  p.nr_max_iters = cfg.nr_max_iters;
  if (p.dim() != mat.n_split())
    throw std::invalid_argument("projector/matrix split dimensions disagree");
  return p;
}

Projector Projector::lcvx(const ScenarioConfig& cfg, const ProblemMatrices& mat) {
  Projector p;
  p.cone_mode = ConeMode::Relaxed;
  p.n_cone = mat.layout.N;
  p.sigma0_slot = false;
  p.n_band = 0;
  p.n_ineq = mat.n_ineq();
  p.rho1 = cfg.rho1;
  p.rho2 = cfg.rho2;
  p.nr_tol = cfg.nr_tol;
  p.nr_max_iters = cfg.nr_max_iters;
  if (mat.n_w2() != 0)
    throw std::invalid_argument("relaxed projector expects no band block");
  if (p.dim() != mat.n_split())
    throw std::invalid_argument("projector/matrix split dimensions disagree");
  return p;
}

void Projector::apply_block(int block, const Eigen::VectorXd& arg,
                            Eigen::VectorXd& out) const {
  if (block < n_cone) {
    const int off = 4 * block;
    const ConePoint in{arg.segment<3>(off), arg(off + 3)};
    const ConePoint pr =
        cone_mode == ConeMode::Surface ? project_cone_surface(in) : project_cone(in);
    out.segment<3>(off) = pr.u;
    out(off + 3) = pr.sigma;
    return;
  }
  const int base = 4 * n_cone;
  if (sigma0_slot && block == n_cone) {
    // sigma_0 pairs with the known constant z0, so the band collapses to an
    // interval; the slot carries sigma_0 - z0 (the bw2 offset convention).
    const double lo = rho1 * std::exp(-z0);
    const double hi = rho2 * std::exp(-z0);
    out(base) = project_interval(arg(base) + z0, lo, hi) - z0;
    return;
  }
  const int pair = block - n_cone - (sigma0_slot ? 1 : 0);
  const int off = base + (sigma0_slot ? 1 : 0) + 2 * pair;
  // Slot order is (sigma_i, z_i).
  const BandPoint pr = project_exp_band({arg(off + 1), arg(off)}, rho1, rho2,
                                        nr_tol, nr_max_iters);
  out(off) = pr.sigma;
  out(off + 1) = pr.z;
}

void Projector::apply_serial(const Eigen::VectorXd& arg, Eigen::VectorXd& out) const {
  assert(arg.size() == dim());
  out.resize(arg.size());
  const int nb = blocks();
  for (int i = 0; i < nb; ++i) apply_block(i, arg, out);
  out.tail(n_ineq) = arg.tail(n_ineq).cwiseMax(0.0);
}

void Projector::apply_parallel(const Eigen::VectorXd& arg, Eigen::VectorXd& out) const {
  assert(arg.size() == dim());
  out.resize(arg.size());
  const int nb = blocks();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nb; ++i) apply_block(i, arg, out);
  out.tail(n_ineq) = arg.tail(n_ineq).cwiseMax(0.0);
}

void Projector::apply(const Eigen::VectorXd& arg, Eigen::VectorXd& out) const {
  if (parallel)
    apply_parallel(arg, out);
  else
    apply_serial(arg, out);
}

}  // namespace exproj
