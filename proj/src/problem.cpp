// Copyright (c) exproj contributors
// SPDX-License-Identifier: Apache-2.0

#include "exproj/problem.hpp"

#include <cmath>
#include <vector>

namespace exproj {

namespace {

using Triplet = Eigen::Triplet<double>;

Eigen::SparseMatrix<double> from_triplets(int rows, int cols,
                                          const std::vector<Triplet>& ts) {
  Eigen::SparseMatrix<double> m(rows, cols);
  m.setFromTriplets(ts.begin(), ts.end());
  m.makeCompressed();
  return m;
}

Eigen::SparseMatrix<double> vstack(const Eigen::SparseMatrix<double>& a,
                                   const Eigen::SparseMatrix<double>& b,
                                   const Eigen::SparseMatrix<double>& c) {
  std::vector<Triplet> ts;
  ts.reserve(a.nonZeros() + b.nonZeros() + c.nonZeros());
  auto append = [&ts](const Eigen::SparseMatrix<double>& m, int row_offset) {
    for (int k = 0; k < m.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it)
        ts.emplace_back(static_cast<int>(it.row()) + row_offset,
                        static_cast<int>(it.col()), it.value());
  };
  append(a, 0);
  append(b, static_cast<int>(a.rows()));
  append(c, static_cast<int>(a.rows() + b.rows()));
  return from_triplets(static_cast<int>(a.rows() + b.rows() + c.rows()),
                       static_cast<int>(a.cols()), ts);
}

}  // namespace

double ProblemMatrices::objective(const Eigen::VectorXd& y) const {
  return y.dot(H * y) + h.dot(y);
}

ProblemMatrices assemble(const ScenarioConfig& cfg, const DiscreteDynamics& dyn) {
  const int N = dyn.N;
  const Layout layout{N};
  const int ny = layout.dim();

  ProblemMatrices mat;
  mat.layout = layout;
  mat.z0 = std::log(cfg.m_wet);

  // Cost: y'Hy + h'y = -z_N + gamma * ||x_N||^2.
  {
    std::vector<Triplet> ts;
    for (int k = 0; k < 6; ++k)
      ts.emplace_back(layout.x(N - 1) + k, layout.x(N - 1) + k, cfg.gamma);
    mat.H = from_triplets(ny, ny, ts);
    mat.h = Eigen::VectorXd::Zero(ny);
    mat.h(layout.z(N - 1)) = -1.0;
  }

  // Equalities: per step, 6 state rows x_{i+1} - A x_i - B u_i = c and one
  // mass row z_{i+1} - z_i + mass_step * sigma_i = 0; x_0, z_0 move to b.
  {
    const int mg = 7 * N;
    std::vector<Triplet> ts;
    mat.b = Eigen::VectorXd::Zero(mg);
    const Eigen::Matrix<double, 6, 1> x0 =
        (Eigen::Matrix<double, 6, 1>() << cfg.r_init, cfg.v_init).finished();
    for (int i = 0; i < N; ++i) {
      const int row = 7 * i;
      for (int r = 0; r < 6; ++r) {
        ts.emplace_back(row + r, layout.x(i) + r, 1.0);
        for (int k = 0; k < 3; ++k) {
          const double bv = dyn.B(r, k);
          if (bv != 0.0) ts.emplace_back(row + r, layout.u(i) + k, -bv);
        }
        if (i > 0) {
          for (int k = 0; k < 6; ++k) {
            const double av = dyn.A(r, k);
            if (av != 0.0) ts.emplace_back(row + r, layout.x(i - 1) + k, -av);
          }
        }
      }
      mat.b.segment<6>(row) = dyn.c;
      if (i == 0) mat.b.segment<6>(row) += dyn.A * x0;

      const int mass_row = row + 6;
      ts.emplace_back(mass_row, layout.z(i), 1.0);
      ts.emplace_back(mass_row, layout.sigma(i), dyn.mass_step);
      if (i > 0)
        ts.emplace_back(mass_row, layout.z(i - 1), -1.0);
      else
        mat.b(mass_row) = mat.z0;
    }
    mat.G = from_triplets(mg, ny, ts);
  }

  // Inequalities: e1' u_i >= sigma_i * cos(theta_tp) per step, plus the
  // terminal mass floor z_N >= log(m_dry).
  {
    const int mp = N + 1;
    std::vector<Triplet> ts;
    mat.q = Eigen::VectorXd::Zero(mp);
    const double cos_tp = std::cos(cfg.theta_tp);
    for (int i = 0; i < N; ++i) {
      ts.emplace_back(i, layout.u(i), 1.0);
      if (cos_tp != 0.0) ts.emplace_back(i, layout.sigma(i), -cos_tp);
    }
    ts.emplace_back(N, layout.z(N - 1), 1.0);
    mat.q(N) = std::log(cfg.m_dry);
    mat.P = from_triplets(mp, ny, ts);
  }

  // Selection maps for the split blocks.
  {
    std::vector<Triplet> ts;
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < 3; ++k) ts.emplace_back(4 * i + k, layout.u(i) + k, 1.0);
      ts.emplace_back(4 * i + 3, layout.sigma(i), 1.0);
    }
    mat.Dw1 = from_triplets(4 * N, ny, ts);
  }
  {
    std::vector<Triplet> ts;
    ts.emplace_back(0, layout.sigma(0), 1.0);
    for (int i = 1; i < N; ++i) {
      ts.emplace_back(1 + 2 * (i - 1), layout.sigma(i), 1.0);
      ts.emplace_back(2 + 2 * (i - 1), layout.z(i - 1), 1.0);  // z_i
    }
    mat.Dw2 = from_triplets(2 * N - 1, ny, ts);
    mat.bw2 = Eigen::VectorXd::Zero(2 * N - 1);
    mat.bw2(0) = mat.z0;
  }

  mat.C = vstack(mat.Dw1, mat.Dw2, mat.P);
  mat.q_tilde = Eigen::VectorXd::Zero(mat.C.rows());
  mat.q_tilde.segment(mat.n_w1(), mat.n_w2()) = mat.bw2;
  mat.q_tilde.tail(mat.n_ineq()) = mat.q;
  return mat;
}

}  // namespace exproj
