// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures for the test suites: closed-form channel families and
// independent oracles the library implementations are checked against.

#pragma once

#include "gso/channel.hpp"
#include "gso/common.hpp"
#include "gso/dynamics.hpp"
#include "gso/entanglement.hpp"
#include "gso/general_channel.hpp"
#include "gso/io.hpp"
#include "gso/phasespace.hpp"
#include "gso/protocols.hpp"
#include "gso/random.hpp"

#include <cmath>

namespace gso::test {

// Single-mode squeezer with isotropic noise: X = diag(e^-r, e^r), Y = y I.
// One-step map on squeezing: s -> s e^{-2r} + y; limit y / (1 - e^{-2r}).
inline GaussianChannel squeezer_channel(double r, double y) {
  Matrix x(2, 2);
  x << std::exp(-r), 0.0, 0.0, std::exp(r);
  return GaussianChannel(1, x, y * Matrix::Identity(2, 2));
}

// Pure loss toward vacuum: X = sqrt(eta) I, Y = (1 - eta) I.
inline GaussianChannel loss_channel(double eta, int n_modes = 1) {
  const int d = 2 * n_modes;
  return GaussianChannel(n_modes, std::sqrt(eta) * Matrix::Identity(d, d),
                         (1.0 - eta) * Matrix::Identity(d, d));
}

// Longest protocol horizon whose squeezing values stay measurable: the
// antisqueezed directions grow like lambda_max(X^T X)^n, and once
// norm * lambda_max^n approaches 1e6 the absolute error of an eigenvalue
// (~norm * 1e-16 per step) starts competing with 1e-9 tolerances.
inline int conditioning_safe_steps(const GaussianChannel& ch, double start_norm, int cap) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrized(ch.X.transpose() * ch.X),
                                            Eigen::EigenvaluesOnly);
  const double growth = std::max(1.02, eig.eigenvalues()(ch.dim() - 1));
  const int n = static_cast<int>(std::log(1e6 / std::max(1.0, start_norm)) / std::log(growth));
  return std::max(3, std::min(cap, n));
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Independent matrix exponential: complex eigendecomposition. Only valid for
// diagonalizable input, which random matrices are almost surely.
inline Matrix expm_by_eigendecomposition(const Matrix& m) {
  Eigen::EigenSolver<Matrix> es(m);
  const ComplexMatrix v = es.eigenvectors();
  ComplexVector lam = es.eigenvalues();
  for (int i = 0; i < lam.size(); ++i) lam(i) = std::exp(lam(i));
  const ComplexMatrix e = v * lam.asDiagonal() * v.inverse();
  return e.real();
}

// Exhaustive rotation-angle search for single-mode general channels.
inline double brute_force_general_grid(const GeneralChannel& ch, const CovMatrix& g,
                                       int budget) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < budget; ++k) {
    const PassiveOp rot = rotation_single_mode((2.0 * M_PI * k) / budget);
    const double v = squeezing(apply_general(ch, apply_passive(g, rot)));
    best = std::min(best, v);
  }
  return best;
}

// Random valid state with an exactly known smallest eigenvalue, plus the
// matching eigenvector, for optimality tests.
struct KnownSqueezing {
  CovMatrix state;
  double s;
  Vector direction;
};
inline KnownSqueezing random_known_squeezing(int n_modes, double s, Rng& rng) {
  KnownSqueezing out{random_cm_with_squeezing(n_modes, s, rng), s, Vector()};
  out.direction = smallest_eigenpair(out.state.m).vector;
  return out;
}

}  // namespace gso::test
