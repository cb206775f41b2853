// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#include "gso/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace gso {

namespace {

// 5-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr double kGlNode[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
constexpr double kGlWeight[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                 0.4786286704993665, 0.2369268850561891};

}  // namespace

LindbladModel::LindbladModel(int n, Matrix h, double loss_rate)
    : n_modes(n), H(std::move(h)), nu(loss_rate) {
  if (n < 1) throw std::invalid_argument("LindbladModel: n_modes must be positive");
  if (H.rows() != 2 * n || H.cols() != 2 * n) {
    throw std::invalid_argument("LindbladModel: H must be 2N x 2N");
  }
  if (!(nu >= 0.0)) throw std::invalid_argument("LindbladModel: nu must be >= 0");
  H = require_symmetric(H, 1e-9, "LindbladModel H");
}

std::pair<Matrix, Matrix> drift_and_diffusion(const LindbladModel& model) {
  const int d = model.dim();
  const Matrix sigma = symplectic_form(model.n_modes);
  return {2.0 * sigma * model.H - model.nu * Matrix::Identity(d, d),
          2.0 * model.nu * Matrix::Identity(d, d)};
}

Matrix matrix_exponential(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix_exponential: matrix must be square");
  }
  return m.exp();
}

GaussianChannel channel_at_time(const LindbladModel& model, double t, int quad_steps) {
  if (t < 0.0) throw std::invalid_argument("channel_at_time: t must be >= 0");
  if (quad_steps < 1) throw std::invalid_argument("channel_at_time: quad_steps must be >= 1");
  const int d = model.dim();
  if (t == 0.0) {
    return GaussianChannel(model.n_modes, Matrix::Identity(d, d), Matrix::Zero(d, d));
  }
  const Matrix sigma = symplectic_form(model.n_modes);
  const Matrix x = std::exp(-model.nu * t) * matrix_exponential(-2.0 * model.H * sigma * t);
  Matrix y = Matrix::Zero(d, d);
  if (model.nu > 0.0) {
    const Matrix generator = 2.0 * sigma * model.H;
    const double h = t / quad_steps;
    for (int panel = 0; panel < quad_steps; ++panel) {
      const double mid = (panel + 0.5) * h;
      for (int node = 0; node < 5; ++node) {
        const double tau = mid + 0.5 * h * kGlNode[node];
        const Matrix g = matrix_exponential(generator * tau);
        y += (0.5 * h * kGlWeight[node] * 2.0 * model.nu * std::exp(-2.0 * model.nu * tau)) *
             (g * g.transpose());
      }
    }
  }
  return GaussianChannel(model.n_modes, x, symmetrized(y));
}

CovMatrix integrate_master_equation(const LindbladModel& model, const CovMatrix& g0, double t,
                                    double dt) {
  if (model.n_modes != g0.n_modes) {
    throw std::invalid_argument("integrate_master_equation: mode count mismatch");
  }
  if (t < 0.0) throw std::invalid_argument("integrate_master_equation: t must be >= 0");
  if (t == 0.0) return g0;
  if (dt <= 0.0) dt = t / 4096.0;
  const auto [a, n] = drift_and_diffusion(model);
  const auto deriv = [&](const Matrix& g) -> Matrix { return a * g + g * a.transpose() + n; };
  // Uniform steps no larger than dt, covering [0, t] exactly.
  const long n_steps = std::max(1L, static_cast<long>(std::ceil(t / dt - 1e-9)));
  const double h = t / static_cast<double>(n_steps);
  Matrix g = g0.m;
  for (long i = 0; i < n_steps; ++i) {
    const Matrix k1 = deriv(g);
    const Matrix k2 = deriv(g + 0.5 * h * k1);
    const Matrix k3 = deriv(g + 0.5 * h * k2);
    const Matrix k4 = deriv(g + h * k3);
    g += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return CovMatrix(g0.n_modes, symmetrized(g));
}

}  // namespace gso
