// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/admm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace exproj {

namespace {

using Triplet = Eigen::Triplet<double>;

void append_sparse(std::vector<Triplet>& ts, const Eigen::SparseMatrix<double>& m,
                   int row_offset, int col_offset, bool transpose = false) {
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) {
      const int r = static_cast<int>(transpose ? it.col() : it.row());
      const int c = static_cast<int>(transpose ? it.row() : it.col());
      ts.emplace_back(r + row_offset, c + col_offset, it.value());
    }
}

}  // namespace

KktFactor::KktFactor(const ProblemMatrices& mat, double penalty_rho)
    : n_(mat.layout.dim()), m_(static_cast<int>(mat.G.rows())), rho_(penalty_rho) {
  if (!(penalty_rho > 0.0))
    throw std::invalid_argument("penalty_rho must be positive");

  Eigen::SparseMatrix<double> top_left =
      Eigen::SparseMatrix<double>(2.0 * mat.H) +
      penalty_rho * Eigen::SparseMatrix<double>(mat.C.transpose() * mat.C);

  std::vector<Triplet> ts;
  ts.reserve(top_left.nonZeros() + 2 * mat.G.nonZeros());
  append_sparse(ts, top_left, 0, 0);
  append_sparse(ts, mat.G, n_, 0);
  append_sparse(ts, mat.G, 0, n_, /*transpose=*/true);
  kkt_.resize(n_ + m_, n_ + m_);
  kkt_.setFromTriplets(ts.begin(), ts.end());
  kkt_.makeCompressed();

  lu_ = std::make_unique<Eigen::SparseLU<Eigen::SparseMatrix<double>>>();
  lu_->compute(kkt_);
  if (lu_->info() != Eigen::Success)
    throw std::runtime_error("KKT factorization failed: system is singular "
                             "(rank-deficient G or degenerate scaling)");

  // Probe solve against a fixed incoherent right-hand side; an exactly
  // dependent equality row can slip through LU with a tiny pivot and only
  // show up here.
  Eigen::VectorXd probe(dim());
  for (int i = 0; i < probe.size(); ++i) probe(i) = std::sin(0.7 * i + 0.3);
  const Eigen::VectorXd x = lu_->solve(probe);
  const double rel = (kkt_ * x - probe).cwiseAbs().maxCoeff() /
                     probe.cwiseAbs().maxCoeff();
  if (!std::isfinite(rel) || rel > 1e-8)
    throw std::runtime_error("KKT factorization failed: probe residual " +
                             std::to_string(rel));
}

Eigen::VectorXd KktFactor::solve(const Eigen::VectorXd& rhs) const {
  if (rhs.size() != dim())
    throw std::invalid_argument("KKT solve: rhs dimension mismatch");
  return lu_->solve(rhs);
}

KktFactor factor_kkt(const ProblemMatrices& mat, double penalty_rho) {
  return KktFactor(mat, penalty_rho);
}

AdmmParams AdmmParams::from(const ScenarioConfig& cfg) {
  AdmmParams p;
  p.penalty_rho = cfg.penalty_rho;
  p.max_iters = cfg.max_iters;
  p.eps_primal = cfg.eps_primal;
  p.eps_dual = cfg.eps_dual;
  return p;
}

Eigen::VectorXd update_primal(const KktFactor& f, const ProblemMatrices& mat,
                              const Eigen::VectorXd& w, const Eigen::VectorXd& y_s) {
  Eigen::VectorXd rhs(f.dim());
  rhs.head(f.primal_dim()) =
      f.penalty() * (mat.C.transpose() * (mat.q_tilde + w - y_s)) - mat.h;
  rhs.tail(f.dual_dim()) = mat.b;
  return f.solve(rhs).head(f.primal_dim());
}

Eigen::VectorXd update_splitting(const Eigen::VectorXd& y, const Eigen::VectorXd& y_s,
                                 const ProblemMatrices& mat, const Projector& proj) {
  const Eigen::VectorXd arg = mat.C * y - mat.q_tilde + y_s;
  Eigen::VectorXd w;
  proj.apply(arg, w);
  return w;
}

Eigen::VectorXd update_dual(const Eigen::VectorXd& y, const Eigen::VectorXd& w,
                            const ProblemMatrices& mat, const Eigen::VectorXd& y_s) {
  return y_s + mat.C * y - mat.q_tilde - w;
}

std::pair<double, double> residuals(const SplitState& state,
                                    const Eigen::VectorXd& prev_w,
                                    const ProblemMatrices& mat, double penalty_rho) {
  const double primal =
      (mat.C * state.y - mat.q_tilde - state.w).lpNorm<Eigen::Infinity>();
  const double dual =
      penalty_rho *
      (mat.C.transpose() * (state.w - prev_w)).lpNorm<Eigen::Infinity>();
  return {primal, dual};
}

AdmmResult solve(const ProblemMatrices& mat, const Projector& proj,
                 const AdmmParams& params) {
  const KktFactor factor(mat, params.penalty_rho);

  SplitState s;
  if (params.warm != nullptr) {
    s = *params.warm;
  } else {
    s.y = Eigen::VectorXd::Zero(mat.layout.dim());
    Eigen::VectorXd arg0 = -mat.q_tilde;
    proj.apply(arg0, s.w);
    s.y_s = Eigen::VectorXd::Zero(mat.n_split());
  }

  AdmmResult res;
  if (params.record_history) res.history.reserve(params.max_iters);

  SplitState best = s;
  best.primal_res = std::numeric_limits<double>::infinity();
  double best_primal_mark = std::numeric_limits<double>::infinity();
  int last_improvement = 0;

  Eigen::VectorXd cy_minus_q(mat.n_split());
  Eigen::VectorXd arg(mat.n_split());
  Eigen::VectorXd prev_w = s.w;

  for (int iter = 1; iter <= params.max_iters; ++iter) {
    s.y = update_primal(factor, mat, s.w, s.y_s);
    cy_minus_q = mat.C * s.y - mat.q_tilde;
    arg = cy_minus_q + s.y_s;
    prev_w.swap(s.w);
    proj.apply(arg, s.w);
    s.y_s = arg - s.w;  // accumulated constraint residual

    s.iter = iter;
    s.primal_res = (cy_minus_q - s.w).lpNorm<Eigen::Infinity>();
    s.dual_res = params.penalty_rho *
                 (mat.C.transpose() * (s.w - prev_w)).lpNorm<Eigen::Infinity>();
    if (params.record_history) res.history.emplace_back(s.primal_res, s.dual_res);

    if (s.primal_res < best.primal_res) best = s;
    if (s.primal_res < best_primal_mark - params.stall_improvement) {
      best_primal_mark = s.primal_res;
      last_improvement = iter;
    }

    res.iterations = iter;
    if (s.primal_res <= params.eps_primal && s.dual_res <= params.eps_dual) {
      res.status = SolveStatus::Converged;
      res.converged = true;
      res.state = s;
      res.objective = mat.objective(s.y);
      return res;
    }
    if (iter - last_improvement >= params.stall_window) {
      res.status = SolveStatus::Stalled;
      break;
    }
  }

  res.state = best;
  res.objective = mat.objective(best.y);
  return res;
}

}  // namespace exproj
