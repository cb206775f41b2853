// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Concrete channel families from continuous dynamics: a quadratic
// Hamiltonian with photon loss to a vacuum reservoir yields, at each time t,
// an affine channel (X_t, Y_t). A direct ODE integrator over the second
// moments serves as an independent cross-check.

#pragma once

#include "gso/channel.hpp"
#include "gso/common.hpp"
#include "gso/phasespace.hpp"

#include <utility>

namespace gso {

struct LindbladModel {
  int n_modes = 0;
  Matrix H;        // quadratic Hamiltonian matrix over (Q1, P1, ..., QN, PN)
  double nu = 0.0; // loss rate, >= 0

  LindbladModel() = default;
  LindbladModel(int n, Matrix h, double loss_rate);
  int dim() const { return 2 * n_modes; }
};

// Coefficients of the second-moment equation d/dt gamma = A gamma + gamma A^T + N:
// A = 2 sigma H - nu I, N = 2 nu I.
std::pair<Matrix, Matrix> drift_and_diffusion(const LindbladModel& model);

// exp(M) for square real M, scaling-and-squaring with a Pade approximant.
Matrix matrix_exponential(const Matrix& m);

// The channel E_t: X = e^{-nu t} exp(-2 H sigma t); Y by composite
// Gauss-Legendre quadrature of 2 nu int_0^t e^{-2 nu T} G(T) G(T)^T dT with
// G(T) = exp(2 sigma H T), using quad_steps panels. t = 0 gives the identity
// channel exactly.
GaussianChannel channel_at_time(const LindbladModel& model, double t, int quad_steps = 512);

// Classical fourth-order integration of the moment equation from g0 over
// time t with step dt (dt <= 0 selects t/4096). Shares no code with
// channel_at_time beyond drift_and_diffusion; used to validate it.
CovMatrix integrate_master_equation(const LindbladModel& model, const CovMatrix& g0, double t,
                                    double dt = 0.0);

}  // namespace gso
