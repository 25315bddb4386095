// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "exproj/dynamics.hpp"
#include "exproj/scenario.hpp"

namespace exproj {

/// Index map for the stacked decision vector. Each step i contributes the
/// 11 entries y_i = [u_i (3), x_{i+1} (6), sigma_i, z_{i+1}], so
/// dim(y) = 11 N. The initial state x_0 and log-mass z_0 are constants and
/// live in the equality right-hand side, not in y.
struct Layout {
  int N = 0;

  static constexpr int kStep = 11;

  int dim() const { return kStep * N; }
  int u(int i) const { return kStep * i; }            // u_i, 3 entries
  int x(int i) const { return kStep * i + 3; }        // x_{i+1}, 6 entries
  int sigma(int i) const { return kStep * i + 9; }    // sigma_i
  int z(int i) const { return kStep * i + 10; }       // z_{i+1}
};

/// Stacked matrices of the discretized problem
///
///   minimize    y'Hy + h'y
///   subject to  Gy = b,  Py >= q,  blockwise set constraints on C y - q_tilde
///
/// with C = [Dw1; Dw2; P] and q_tilde = [0; bw2; q]. Dw1 extracts the
/// (u_i, sigma_i) 4-blocks, Dw2 the [sigma_0, (sigma_i, z_i)_{i>=1}] thrust
/// band slots, and P carries the pointing rows plus the terminal mass floor
/// (and, for the relaxed variant, the linearized thrust-bound rows).
struct ProblemMatrices {
  Layout layout;

  Eigen::SparseMatrix<double> H;    // 11N x 11N, diagonal
  Eigen::VectorXd h;                // 11N
  Eigen::SparseMatrix<double> G;    // 7N x 11N
  Eigen::VectorXd b;                // 7N
  Eigen::SparseMatrix<double> P;    // n_ineq x 11N
  Eigen::VectorXd q;                // n_ineq
  Eigen::SparseMatrix<double> Dw1;  // 4N x 11N
  Eigen::SparseMatrix<double> Dw2;  // (2N-1) x 11N, or 0 rows
  Eigen::VectorXd bw2;              // [z_0, 0, ..., 0]
  Eigen::SparseMatrix<double> C;    // stacked [Dw1; Dw2; P]
  Eigen::VectorXd q_tilde;          // stacked [0; bw2; q]

  double z0 = 0.0;  // log m_wet in assembly units

  int n_w1() const { return static_cast<int>(Dw1.rows()); }
  int n_w2() const { return static_cast<int>(Dw2.rows()); }
  int n_ineq() const { return static_cast<int>(P.rows()); }
  int n_split() const { return static_cast<int>(C.rows()); }

  double objective(const Eigen::VectorXd& y) const;
};

/// Builds H, h, G, b, P, q and the selection maps from the scenario and its
/// discretization. Units follow cfg; solvers pass a normalized scenario.
ProblemMatrices assemble(const ScenarioConfig& cfg, const DiscreteDynamics& dyn);

}  // namespace exproj
