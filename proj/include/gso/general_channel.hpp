// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Non-deterministic Gaussian operations in the Schur-complement form
// gamma -> A - C (B + gamma)^{-1} C^T, parameterized by the blocks of a
// partially transposed two-part covariance matrix.

#pragma once

#include "gso/common.hpp"
#include "gso/phasespace.hpp"

namespace gso {

struct GeneralChannel {
  int n_modes = 0;
  Matrix A;
  Matrix B;
  Matrix C;

  GeneralChannel() = default;
  GeneralChannel(int n, Matrix a, Matrix b, Matrix c);
  int dim() const { return 2 * n_modes; }
};

// Validity: the reassembled two-part matrix [[A, C], [C^T, B]] must, after
// undoing the partial transpose on the second half, satisfy the uncertainty
// relation. Also requires B + I to be invertible so the map is defined on
// all valid inputs.
Validity is_valid_general_channel(const GeneralChannel& ch, const Tolerances& tol = {});

// A - C (B + gamma)^{-1} C^T, symmetrized. Throws SingularMatrixError when
// B + gamma is numerically singular.
CovMatrix apply_general(const GeneralChannel& ch, const CovMatrix& g);

// Best output squeezing over all inputs K^T gamma K with gamma >= s in the
// soft direction phi, together with the optimal passive operation. The
// output eigenvector psi of the optimum lifts to chi = C^T psi; the passive
// op aligns phi with the normalized (B + sI)^{-1} chi direction. When chi
// vanishes the input direction is irrelevant and K = I is returned.
struct GeneralStep {
  double value;      // smallest output eigenvalue achievable
  PassiveOp k;       // passive operation attaining it
  Vector direction;  // output direction realizing the optimum
};
GeneralStep optimal_general_step(const GeneralChannel& ch, double s, const Vector& phi);

// Best squeezing reachable in one use from any input with squeezing s:
// lambda_min of A - C (B + sI)^{-1} C^T. Requires B + sI invertible.
double optimal_general_squeezing(const GeneralChannel& ch, double s);

// Two-part matrix [[A, C], [C^T, B]] the channel was split from.
Matrix reassemble_two_part(const GeneralChannel& ch);

}  // namespace gso
