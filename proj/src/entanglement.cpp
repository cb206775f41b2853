// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#include "gso/entanglement.hpp"

#include <cmath>

namespace gso {

PassiveOp balanced_beam_splitter() {
  const double r = std::sqrt(0.5);
  Matrix b = Matrix::Zero(4, 4);
  b.topLeftCorner(2, 2) = r * Matrix::Identity(2, 2);
  b.topRightCorner(2, 2) = r * Matrix::Identity(2, 2);
  b.bottomLeftCorner(2, 2) = -r * Matrix::Identity(2, 2);
  b.bottomRightCorner(2, 2) = r * Matrix::Identity(2, 2);
  return PassiveOp(2, std::move(b));
}

Matrix partial_transpose(const CovMatrix& g) {
  if (g.n_modes != 2) {
    throw std::invalid_argument("partial_transpose: state must have exactly two modes");
  }
  return partial_transpose_second_half(g.m);
}

double log_negativity(const CovMatrix& g, const Tolerances& tol) {
  const Validity v = is_valid_cm(g.m, tol);
  if (!v.ok) {
    throw std::invalid_argument("log_negativity: invalid covariance matrix: " + v.detail);
  }
  const Vector nus = symplectic_eigenvalues(partial_transpose(g));
  double e = 0.0;
  // A symplectic eigenvalue within the PSD tolerance of 1 carries no
  // negativity; without the cutoff the vacuum would report rounding noise.
  for (int i = 0; i < nus.size(); ++i) {
    if (nus(i) < 1.0 - tol.psd) e -= std::log(nus(i));
  }
  return e;
}

namespace {

// Single-mode rotation K with K^T gamma K carrying the softest direction of
// gamma along `axis` (e1 for Q, e2 for P): K axis = eigvec.
PassiveOp align_soft_direction(const CovMatrix& g, const Vector& axis) {
  const EigPair soft = smallest_eigenpair(g.m);
  return passive_mapping(axis, soft.vector);
}

}  // namespace

CovMatrix entangle_canonical(const CovMatrix& g1, const CovMatrix& g2) {
  if (g1.n_modes != 1 || g2.n_modes != 1) {
    throw std::invalid_argument("entangle_canonical: inputs must be single-mode states");
  }
  Vector q_axis(2), p_axis(2);
  q_axis << 1.0, 0.0;
  p_axis << 0.0, 1.0;
  const CovMatrix a = apply_passive(g1, align_soft_direction(g1, q_axis));
  const CovMatrix b = apply_passive(g2, align_soft_direction(g2, p_axis));
  Matrix stacked = Matrix::Zero(4, 4);
  stacked.topLeftCorner(2, 2) = a.m;
  stacked.bottomRightCorner(2, 2) = b.m;
  return apply_passive(CovMatrix(2, std::move(stacked)), balanced_beam_splitter());
}

EntanglementBound entanglement_bound(const GaussianChannel& ch, int steps,
                                     const Tolerances& tol) {
  if (steps < 0) throw std::invalid_argument("entanglement_bound: steps must be >= 0");
  EntanglementBound bound;
  if (steps == 0) {
    const FixedPointResult fp = fixed_point(ch, tol);
    bound.status = fp.status;
    if (!fp) return bound;
    bound.s_opt = fp.s_inf;
  } else {
    double s = 1.0;  // vacuum input
    for (int i = 0; i < steps; ++i) s = optimal_squeezing(ch, s);
    bound.s_opt = s;
  }
  bound.value = -std::log(bound.s_opt);
  return bound;
}

}  // namespace gso
