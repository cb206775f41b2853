// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#include "gso/phasespace.hpp"

#include <cmath>
#include <complex>

namespace gso {

namespace {

void check_even_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a nonempty square matrix of even dimension");
  }
}

}  // namespace

Matrix require_symmetric(const Matrix& m, double tol, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * norm_scale(m)) {
    throw std::invalid_argument(std::string(what) + ": matrix asymmetry " +
                                std::to_string(asym) + " exceeds tolerance");
  }
  return symmetrized(m);
}

CovMatrix::CovMatrix(int n, Matrix mat) : n_modes(n), m(std::move(mat)) {
  if (n < 1) throw std::invalid_argument("CovMatrix: n_modes must be positive");
  if (m.rows() != 2 * n || m.cols() != 2 * n) {
    throw std::invalid_argument("CovMatrix: matrix must be 2N x 2N");
  }
}

CovMatrix CovMatrix::vacuum(int n) {
  return CovMatrix(n, Matrix::Identity(2 * n, 2 * n));
}

PassiveOp::PassiveOp(int n, Matrix mat) : n_modes(n), m(std::move(mat)) {
  if (n < 1) throw std::invalid_argument("PassiveOp: n_modes must be positive");
  if (m.rows() != 2 * n || m.cols() != 2 * n) {
    throw std::invalid_argument("PassiveOp: matrix must be 2N x 2N");
  }
}

PassiveOp PassiveOp::identity(int n) {
  return PassiveOp(n, Matrix::Identity(2 * n, 2 * n));
}

Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be positive");
  Matrix s = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    s(2 * j, 2 * j + 1) = 1.0;
    s(2 * j + 1, 2 * j) = -1.0;
  }
  return s;
}

double squeezing(const CovMatrix& g) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(g.m), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

EigPair smallest_eigenpair(const Matrix& m) {
  const Matrix sym = require_symmetric(m, 1e-9, "smallest_eigenpair");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  Vector v = es.eigenvectors().col(0);
  // Fix the sign: largest-magnitude component positive, first one on ties.
  int imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  if (v(imax) < 0.0) v = -v;
  return {es.eigenvalues()(0), v};
}

Validity is_valid_cm(const Matrix& gamma, const Tolerances& tol) {
  check_even_square(gamma, "is_valid_cm");
  const double asym = (gamma - gamma.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.psd * norm_scale(gamma)) {
    return {false, std::numeric_limits<double>::quiet_NaN(), asym,
            "matrix is not symmetric"};
  }
  const Matrix sym = symmetrized(gamma);
  const int n = static_cast<int>(gamma.rows()) / 2;
  ComplexMatrix h = sym.cast<std::complex<double>>();
  h += std::complex<double>(0.0, 1.0) * symplectic_form(n).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  if (lmin < -tol.psd * norm_scale(sym)) {
    return {false, lmin, asym, "uncertainty relation violated"};
  }
  return {true, lmin, asym, ""};
}

Validity is_passive(const Matrix& k, const Tolerances& tol) {
  check_even_square(k, "is_passive");
  const int n = static_cast<int>(k.rows()) / 2;
  const Matrix sigma = symplectic_form(n);
  const double dev_orth = (k.transpose() * k - Matrix::Identity(k.rows(), k.rows()))
                              .cwiseAbs()
                              .maxCoeff();
  const double dev_symp = (k.transpose() * sigma * k - sigma).cwiseAbs().maxCoeff();
  const double dev = std::max(dev_orth, dev_symp);
  if (dev > tol.orth) {
    return {false, std::numeric_limits<double>::quiet_NaN(), dev,
            dev_orth > dev_symp ? "not orthogonal" : "not symplectic"};
  }
  return {true, std::numeric_limits<double>::quiet_NaN(), dev, ""};
}

CovMatrix apply_passive(const CovMatrix& g, const PassiveOp& k) {
  if (g.n_modes != k.n_modes) {
    throw std::invalid_argument("apply_passive: mode count mismatch");
  }
  return CovMatrix(g.n_modes, symmetrized(k.m.transpose() * g.m * k.m));
}

PassiveOp passive_mapping(const Vector& u, const Vector& v) {
  if (u.size() != v.size() || u.size() == 0 || u.size() % 2 != 0) {
    throw std::invalid_argument("passive_mapping: vectors must share an even dimension");
  }
  const double eps_unit = 1e-8;
  if (std::abs(u.norm() - 1.0) > eps_unit || std::abs(v.norm() - 1.0) > eps_unit) {
    throw std::invalid_argument("passive_mapping: inputs must be unit vectors");
  }
  const int n = static_cast<int>(u.size()) / 2;
  const ComplexVector a = complexify(u);
  const ComplexVector b = complexify(v);
  using Cx = std::complex<double>;

  // Householder sending x to -e^{i arg(x_0)} e_0; the reflector never
  // degenerates because |x| = 1 implies |x + e^{i arg(x_0)} e_0|^2 = 2 + 2|x_0|.
  const auto reflector = [n](const ComplexVector& x) {
    const Cx phase = std::abs(x(0)) > 0.0 ? x(0) / std::abs(x(0)) : Cx(1.0, 0.0);
    ComplexVector w = x;
    w(0) += phase;
    ComplexMatrix h = ComplexMatrix::Identity(n, n);
    h -= (2.0 / w.squaredNorm()) * (w * w.adjoint());
    return std::make_pair(h, phase);
  };

  const auto [h1, phase_a] = reflector(a);
  const auto [h2, phase_b] = reflector(b);
  ComplexMatrix d = ComplexMatrix::Identity(n, n);
  d(0, 0) = phase_b / phase_a;
  const ComplexMatrix unitary = h2 * d * h1;

  PassiveOp k(n, realify(unitary));
  if ((k.m * u - v).norm() > 1e-8) {
    throw std::logic_error("passive_mapping: construction failed to map u to v");
  }
  return k;
}

PassiveOp rotation_single_mode(double theta) {
  Matrix k(2, 2);
  k << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return PassiveOp(1, std::move(k));
}

double angle_of(const PassiveOp& k) {
  if (k.n_modes != 1) {
    throw std::invalid_argument("angle_of: defined for single-mode operations only");
  }
  const Validity p = is_passive(k.m);
  if (!p) throw std::invalid_argument("angle_of: matrix is not passive: " + p.detail);
  double theta = std::atan2(k.m(0, 1), k.m(0, 0));
  if (theta < 0.0) theta += 2.0 * M_PI;
  return theta;
}

Vector symplectic_eigenvalues(const Matrix& gamma) {
  check_even_square(gamma, "symplectic_eigenvalues");
  const Matrix sym = require_symmetric(gamma, 1e-9, "symplectic_eigenvalues");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.eigenvalues()(0) <= 0.0) {
    throw std::invalid_argument("symplectic_eigenvalues: matrix is not positive definite");
  }
  const int n = static_cast<int>(gamma.rows()) / 2;
  const Matrix root =
      es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  // i W sigma W is Hermitian and similar to i sigma gamma; its spectrum is
  // the +- paired symplectic spectrum.
  const Matrix wsw = root * symplectic_form(n) * root;
  const ComplexMatrix herm = std::complex<double>(0.0, 1.0) * wsw.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> hes(herm, Eigen::EigenvaluesOnly);
  return hes.eigenvalues().tail(n);
}

Matrix realify(const ComplexMatrix& u) {
  const int n = static_cast<int>(u.rows());
  if (u.cols() != n) throw std::invalid_argument("realify: matrix must be square");
  Matrix r(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double re = u(j, k).real();
      const double im = u(j, k).imag();
      r(2 * j, 2 * k) = re;
      r(2 * j, 2 * k + 1) = -im;
      r(2 * j + 1, 2 * k) = im;
      r(2 * j + 1, 2 * k + 1) = re;
    }
  }
  return r;
}

ComplexVector complexify(const Vector& u) {
  if (u.size() % 2 != 0) throw std::invalid_argument("complexify: dimension must be even");
  const int n = static_cast<int>(u.size()) / 2;
  ComplexVector c(n);
  for (int j = 0; j < n; ++j) c(j) = std::complex<double>(u(2 * j), u(2 * j + 1));
  return c;
}

Matrix partial_transpose_second_half(const Matrix& m) {
  check_even_square(m, "partial_transpose_second_half");
  const int modes = static_cast<int>(m.rows()) / 2;
  if (modes % 2 != 0) {
    throw std::invalid_argument("partial_transpose_second_half: mode count must be even");
  }
  Vector signs = Vector::Ones(m.rows());
  for (int j = modes / 2; j < modes; ++j) signs(2 * j + 1) = -1.0;
  return signs.asDiagonal() * m * signs.asDiagonal();
}

}  // namespace gso
