// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gso {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Numerical tolerances shared by all validity checks.
/// `psd` gates positive-semidefiniteness tests (relative to the matrix scale),
/// `orth` gates orthogonality and symplecticity tests.
struct Tolerances {
  double psd = 1e-9;
  double orth = 1e-10;
};

/// Result of a validity check. `min_eigenvalue` carries the smallest
/// eigenvalue of the certificate matrix where the check is spectral;
/// `deviation` carries the largest entrywise violation where it is not.
struct Validity {
  bool ok = false;
  double min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  double deviation = std::numeric_limits<double>::quiet_NaN();
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Thrown when a matrix that must be inverted is numerically singular.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Matrix symmetrized(const Matrix& m) {
  return 0.5 * (m + m.transpose());
}

/// Scale factor that makes tolerances relative: max(1, max |M_ij|).
inline double norm_scale(const Matrix& m) {
  return m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
}

/// Symmetrize M, rejecting asymmetry beyond tol (relative to the matrix scale).
Matrix require_symmetric(const Matrix& m, double tol, const char* what);

}  // namespace gso
