// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/solvers.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "exproj/dynamics.hpp"

namespace exproj {

namespace {

SolveResult run(const ScenarioConfig& cfg, const SolveOptions& opts, bool relaxed) {
  cfg.validate();
  const Scaling sc = Scaling::of(cfg);
  const ScenarioConfig ncfg = sc.normalize(cfg);
  const DiscreteDynamics dyn = discretize(ncfg);

  ProblemMatrices mat;
  Projector proj;
  if (relaxed) {
    mat = assemble_lcvx(ncfg, dyn, build_lcvx_reference(ncfg));
    proj = Projector::lcvx(ncfg, mat);
  } else {
    mat = assemble(ncfg, dyn);
    proj = Projector::exproj(ncfg, mat);
  }
  proj.parallel = opts.parallel;

  AdmmParams params = AdmmParams::from(ncfg);
  params.record_history = opts.record_history;

  SplitState warm;
  if (opts.warm_start != nullptr) {
    warm.y = pack(to_normalized(*opts.warm_start, sc));
    if (warm.y.size() != mat.layout.dim())
      throw std::invalid_argument("warm start has wrong horizon for this scenario");
    warm.w = update_splitting(warm.y, Eigen::VectorXd::Zero(mat.n_split()), mat, proj);
    warm.y_s = Eigen::VectorXd::Zero(mat.n_split());
    params.warm = &warm;
  }

  const AdmmResult res = solve(mat, proj, params);

  SolveResult out;
  out.solver = relaxed ? "lcvx" : "exproj";
  out.trajectory = to_physical(unpack(res.state.y, ncfg), sc);
  out.converged = res.converged;
  out.status = res.status;
  out.iterations = res.iterations;
  out.primal_residual = res.state.primal_res;
  out.dual_residual = res.state.dual_res;
  out.objective = res.objective;
  out.fuel = out.trajectory.m(0) - out.trajectory.m(dyn.N);
  out.tf = cfg.tf;
  out.dt = cfg.dt;
  out.N = dyn.N;
  out.history = res.history;
  return out;
}

}  // namespace

LcvxReference build_lcvx_reference(const ScenarioConfig& cfg) {
  const int N = cfg.horizon();
  if (cfg.m_wet - cfg.alpha * cfg.rho2 * cfg.tf <= 0.0)
    throw std::invalid_argument(
        "LCvx reference mass reaches zero within the horizon "
        "(alpha * rho2 * tf >= m_wet)");
  LcvxReference ref;
  ref.z_ref.resize(N);
  ref.a1.resize(N);
  ref.a2.resize(N);
  for (int i = 0; i < N; ++i) {
    const double m_ref = cfg.m_wet - cfg.alpha * cfg.rho2 * (i * cfg.dt);
    ref.z_ref(i) = std::log(m_ref);
    ref.a1(i) = cfg.rho1 / m_ref;
    ref.a2(i) = cfg.rho2 / m_ref;
  }
  return ref;
}

ProblemMatrices assemble_lcvx(const ScenarioConfig& cfg, const DiscreteDynamics& dyn,
                              const LcvxReference& ref) {
  ProblemMatrices mat = assemble(cfg, dyn);
  const Layout& L = mat.layout;
  const int N = L.N;

  // Cost: dt * sum(sigma_i); the gamma ||x_N||^2 block in H is kept.
  mat.h.setZero();
  for (int i = 0; i < N; ++i) mat.h(L.sigma(i)) = cfg.dt;

  // Linearized thrust bounds around z_ref, two rows per step:
  //   sigma_i + a1_i z_i >= a1_i (1 + z_ref_i)
  //  -sigma_i - a2_i z_i >= -a2_i (1 + z_ref_i)
  // For i = 0 the constant z_0 folds into the right-hand side.
  const int base = static_cast<int>(mat.P.rows());
  std::vector<Eigen::Triplet<double>> ts;
  for (int k = 0; k < mat.P.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(mat.P, k); it; ++it)
      ts.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                      it.value());
  Eigen::VectorXd q(base + 2 * N);
  q.head(base) = mat.q;
  for (int i = 0; i < N; ++i) {
    const int lo_row = base + 2 * i;
    const int hi_row = base + 2 * i + 1;
    ts.emplace_back(lo_row, L.sigma(i), 1.0);
    ts.emplace_back(hi_row, L.sigma(i), -1.0);
    double rhs_lo = ref.a1(i) * (1.0 + ref.z_ref(i));
    double rhs_hi = -ref.a2(i) * (1.0 + ref.z_ref(i));
    if (i == 0) {
      rhs_lo -= ref.a1(i) * mat.z0;
      rhs_hi += ref.a2(i) * mat.z0;
    } else {
      ts.emplace_back(lo_row, L.z(i - 1), ref.a1(i));
      ts.emplace_back(hi_row, L.z(i - 1), -ref.a2(i));
    }
    q(lo_row) = rhs_lo;
    q(hi_row) = rhs_hi;
  }
  Eigen::SparseMatrix<double> P(base + 2 * N, L.dim());
  P.setFromTriplets(ts.begin(), ts.end());
  P.makeCompressed();
  mat.P = P;
  mat.q = q;

  // No band selection block in the relaxed variant.
  mat.Dw2.resize(0, L.dim());
  mat.Dw2.makeCompressed();
  mat.bw2.resize(0);

  // Restack C and q_tilde.
  Eigen::SparseMatrix<double> C(mat.n_w1() + mat.n_ineq(), L.dim());
  std::vector<Eigen::Triplet<double>> cts;
  for (int k = 0; k < mat.Dw1.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(mat.Dw1, k); it; ++it)
      cts.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                       it.value());
  for (int k = 0; k < mat.P.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(mat.P, k); it; ++it)
      cts.emplace_back(static_cast<int>(it.row()) + mat.n_w1(),
                       static_cast<int>(it.col()), it.value());
  C.setFromTriplets(cts.begin(), cts.end());
  C.makeCompressed();
  mat.C = C;
  mat.q_tilde.resize(mat.n_split());
  mat.q_tilde.head(mat.n_w1()).setZero();
  mat.q_tilde.tail(mat.n_ineq()) = mat.q;
  return mat;
}

SolveResult solve_exproj(const ScenarioConfig& cfg, const SolveOptions& opts) {
  return run(cfg, opts, /*relaxed=*/false);
}

SolveResult solve_lcvx(const ScenarioConfig& cfg, const SolveOptions& opts) {
  return run(cfg, opts, /*relaxed=*/true);
}

}  // namespace exproj
