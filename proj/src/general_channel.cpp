// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#include "gso/general_channel.hpp"

namespace gso {

namespace {

// Inverse through an eigendecomposition so near-singularity is detected
// explicitly instead of surfacing as garbage from a factorization.
Matrix checked_inverse(const Matrix& p, const char* what) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(p));
  if (es.eigenvalues()(0) <= 1e-12 * norm_scale(p)) {
    throw SingularMatrixError(std::string(what) + ": matrix is numerically singular");
  }
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

GeneralChannel::GeneralChannel(int n, Matrix a, Matrix b, Matrix c)
    : n_modes(n), A(std::move(a)), B(std::move(b)), C(std::move(c)) {
  if (n < 1) throw std::invalid_argument("GeneralChannel: n_modes must be positive");
  const int d = 2 * n;
  if (A.rows() != d || A.cols() != d || B.rows() != d || B.cols() != d || C.rows() != d ||
      C.cols() != d) {
    throw std::invalid_argument("GeneralChannel: blocks must be 2N x 2N");
  }
  A = require_symmetric(A, 1e-9, "GeneralChannel A");
  B = require_symmetric(B, 1e-9, "GeneralChannel B");
}

Matrix reassemble_two_part(const GeneralChannel& ch) {
  const int d = ch.dim();
  Matrix two(2 * d, 2 * d);
  two.topLeftCorner(d, d) = ch.A;
  two.topRightCorner(d, d) = ch.C;
  two.bottomLeftCorner(d, d) = ch.C.transpose();
  two.bottomRightCorner(d, d) = ch.B;
  return two;
}

Validity is_valid_general_channel(const GeneralChannel& ch, const Tolerances& tol) {
  // The blocks parameterize the partial transpose of a two-part state; undo
  // the transposition and demand a valid covariance matrix.
  const Matrix state = partial_transpose_second_half(reassemble_two_part(ch));
  Validity v = is_valid_cm(state, tol);
  if (!v.ok) v.detail = "two-part matrix invalid: " + v.detail;
  return v;
}

CovMatrix apply_general(const GeneralChannel& ch, const CovMatrix& g) {
  if (ch.n_modes != g.n_modes) {
    throw std::invalid_argument("apply_general: mode count mismatch");
  }
  const Matrix inv = checked_inverse(ch.B + g.m, "apply_general");
  return CovMatrix(g.n_modes, symmetrized(ch.A - ch.C * inv * ch.C.transpose()));
}

double optimal_general_squeezing(const GeneralChannel& ch, double s) {
  const int d = ch.dim();
  const Matrix inv = checked_inverse(ch.B + s * Matrix::Identity(d, d),
                                     "optimal_general_squeezing");
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      symmetrized(ch.A - ch.C * inv * ch.C.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

GeneralStep optimal_general_step(const GeneralChannel& ch, double s, const Vector& phi) {
  const int d = ch.dim();
  if (phi.size() != d) {
    throw std::invalid_argument("optimal_general_step: direction has wrong dimension");
  }
  const Matrix inv = checked_inverse(ch.B + s * Matrix::Identity(d, d),
                                     "optimal_general_step");
  const EigPair out = smallest_eigenpair(ch.A - ch.C * inv * ch.C.transpose());
  // Attainment: with gamma = sI + N and N phi = 0, the correction to the
  // optimal quadratic form vanishes exactly when K maps (B + sI)^{-1} C^T psi
  // onto the kernel direction phi.
  const Vector w = inv * (ch.C.transpose() * out.vector);
  const double nw = w.norm();
  if (nw < 1e-14) {
    // Output optimum is decoupled from the input; any passive op attains it.
    return {out.value, PassiveOp::identity(ch.n_modes), out.vector};
  }
  return {out.value, passive_mapping(w / nw, phi), out.vector};
}

}  // namespace gso
