// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "exproj/problem.hpp"
#include "exproj/splitting.hpp"

namespace exproj {

/// Cached factorization of the saddle-point system
///
///   [ 2H + rho C'C   G' ] [ y ]   [ rhs ]
///   [ G              0  ] [ nu ] = [ b  ]
///
/// used by every primal update. The factorization is computed once per
/// penalty value; each solve is a pair of triangular backsolves. A
/// deterministic probe solve runs at construction so rank deficiency in G
/// (or degenerate scaling) surfaces immediately instead of as garbage
/// iterates.
class KktFactor {
 public:
  KktFactor(const ProblemMatrices& mat, double penalty_rho);

  /// Solves the full saddle-point system; returns [y; nu].
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

  int primal_dim() const { return n_; }
  int dual_dim() const { return m_; }
  int dim() const { return n_ + m_; }
  double penalty() const { return rho_; }
  const Eigen::SparseMatrix<double>& matrix() const { return kkt_; }

 private:
  Eigen::SparseMatrix<double> kkt_;
  std::unique_ptr<Eigen::SparseLU<Eigen::SparseMatrix<double>>> lu_;
  int n_ = 0;
  int m_ = 0;
  double rho_ = 0.0;
};

KktFactor factor_kkt(const ProblemMatrices& mat, double penalty_rho);

/// Iterate of the splitting method: primal stack y, auxiliary stack
/// w = (w1, w2, w3), scaled duals y_s.
struct SplitState {
  Eigen::VectorXd y;
  Eigen::VectorXd w;
  Eigen::VectorXd y_s;
  int iter = 0;
  double primal_res = 0.0;
  double dual_res = 0.0;
};

enum class SolveStatus { Converged, Stalled, MaxIters };

struct AdmmParams {
  double penalty_rho = 1.0;
  int max_iters = 20000;
  double eps_primal = 1e-6;
  double eps_dual = 1e-6;
  // Terminate as stalled when the best primal residual has not improved by
  // stall_improvement over stall_window iterations.
  double stall_improvement = 1e-10;
  int stall_window = 500;
  bool record_history = false;
  const SplitState* warm = nullptr;

  static AdmmParams from(const ScenarioConfig& cfg);
};

struct AdmmResult {
  SplitState state;  // converged iterate, or the best one seen
  SolveStatus status = SolveStatus::MaxIters;
  bool converged = false;
  int iterations = 0;
  double objective = 0.0;
  std::vector<std::pair<double, double>> history;  // (primal, dual) per iteration
};

/// Equality-constrained quadratic minimizer of the augmented Lagrangian in
/// y: argmin y'Hy + h'y + rho/2 ||Cy - q_tilde - w + y_s||^2 s.t. Gy = b.
Eigen::VectorXd update_primal(const KktFactor& f, const ProblemMatrices& mat,
                              const Eigen::VectorXd& w, const Eigen::VectorXd& y_s);

/// Blockwise projection step: w = Pi(Cy - q_tilde + y_s).
Eigen::VectorXd update_splitting(const Eigen::VectorXd& y, const Eigen::VectorXd& y_s,
                                 const ProblemMatrices& mat, const Projector& proj);

/// Scaled dual ascent: y_s + Cy - q_tilde - w.
Eigen::VectorXd update_dual(const Eigen::VectorXd& y, const Eigen::VectorXd& w,
                            const ProblemMatrices& mat, const Eigen::VectorXd& y_s);

/// (primal, dual) residuals: ||Cy - q_tilde - w||_inf and
/// penalty_rho * ||C'(w - prev_w)||_inf.
std::pair<double, double> residuals(const SplitState& state,
                                    const Eigen::VectorXd& prev_w,
                                    const ProblemMatrices& mat, double penalty_rho);

/// Runs the splitting iteration to convergence, stall, or the iteration
/// cap. Deterministic for fixed inputs: cold start is y = 0,
/// w = Pi(-q_tilde), y_s = 0.
AdmmResult solve(const ProblemMatrices& mat, const Projector& proj,
                 const AdmmParams& params);

}  // namespace exproj
