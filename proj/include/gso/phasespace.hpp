// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gso/common.hpp"

namespace gso {

/// Covariance matrix of an N-mode bosonic state in the interleaved mode
/// ordering (Q1, P1, ..., QN, PN). Dimensionless variances, coherent-state
/// convention: the vacuum has gamma = identity. A matrix is a physical state
/// iff gamma + i*sigma >= 0; see is_valid_cm().
struct CovMatrix {
  int n_modes = 0;
  Matrix m;

  CovMatrix() = default;
  CovMatrix(int n, Matrix mat);
  static CovMatrix vacuum(int n);
  int dim() const { return 2 * n_modes; }
};

/// Orthogonal symplectic matrix K (K^T K = 1 and K^T sigma K = sigma):
/// the noiseless passive resource. Acts on states as gamma -> K^T gamma K.
struct PassiveOp {
  int n_modes = 0;
  Matrix m;

  PassiveOp() = default;
  PassiveOp(int n, Matrix mat);
  static PassiveOp identity(int n);
  int dim() const { return 2 * n_modes; }
};

/// Block-diagonal symplectic form: 2x2 blocks [[0,1],[-1,0]] per mode.
Matrix symplectic_form(int n_modes);

/// Squeezing s(gamma) = smallest eigenvalue of the covariance matrix.
/// Below 1 means sub-vacuum uncertainty in some phase-space direction.
double squeezing(const CovMatrix& g);

struct EigPair {
  double value;
  Vector vector;
};

/// Smallest eigenvalue and a normalized eigenvector of a symmetric matrix.
/// Deterministic: the sign is fixed so the largest-magnitude component is
/// positive (first such component on exact ties).
EigPair smallest_eigenpair(const Matrix& m);

/// Uncertainty-relation check: symmetric and lambda_min(gamma + i sigma) >= -tol.
Validity is_valid_cm(const Matrix& gamma, const Tolerances& tol = {});

/// Passivity check: K^T K = 1 and K^T sigma K = sigma within tol.orth.
Validity is_passive(const Matrix& k, const Tolerances& tol = {});

/// K^T gamma K. Orthogonal conjugation, so the spectrum and in particular
/// the squeezing are preserved.
CovMatrix apply_passive(const CovMatrix& g, const PassiveOp& k);

/// Passive operation mapping unit vector u to unit vector v exactly.
///
/// Construction: read R^{2N} as C^N via c_j = u_{2j} + i u_{2j+1}, build a
/// unitary taking c(u) to c(v) with no residual phase (two Householder
/// reflections and a phase correction), then realify.
PassiveOp passive_mapping(const Vector& u, const Vector& v);

/// Single-mode rotation [[cos t, sin t], [-sin t, cos t]].
PassiveOp rotation_single_mode(double theta);

/// Rotation angle in [0, 2 pi) of a single-mode passive operation.
double angle_of(const PassiveOp& k);

/// One representative per +- pair of the eigenvalues of i sigma gamma,
/// ascending. All >= 1 exactly when gamma is a valid state.
Vector symplectic_eigenvalues(const Matrix& gamma);

/// Realification C^{NxN} -> R^{2Nx2N}: entry a+ib becomes the 2x2 block
/// [[a,-b],[b,a]]. Unitaries map onto the orthogonal symplectic group.
Matrix realify(const ComplexMatrix& u);

/// Complex reading of a real phase-space vector: c_j = u_{2j} + i u_{2j+1}.
ComplexVector complexify(const Vector& u);

/// Negate the momentum entries of the second half of the modes. This is the
/// phase-space partial transpose with respect to that half.
Matrix partial_transpose_second_half(const Matrix& m);

}  // namespace gso
