// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#include "gso/channel.hpp"

#include "gso/random.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace gso {

GaussianChannel::GaussianChannel(int n, Matrix x, Matrix y)
    : n_modes(n), X(std::move(x)), Y(std::move(y)) {
  if (n < 1) throw std::invalid_argument("GaussianChannel: n_modes must be positive");
  if (X.rows() != 2 * n || X.cols() != 2 * n || Y.rows() != 2 * n || Y.cols() != 2 * n) {
    throw std::invalid_argument("GaussianChannel: X and Y must be 2N x 2N");
  }
  Y = require_symmetric(Y, 1e-9, "GaussianChannel Y");
}

Validity is_valid_channel(const GaussianChannel& ch, const Tolerances& tol) {
  const Matrix sigma = symplectic_form(ch.n_modes);
  const std::complex<double> i(0.0, 1.0);
  ComplexMatrix h = ch.Y.cast<std::complex<double>>();
  h += i * (ch.X.transpose() * sigma * ch.X - sigma).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  const double scale = std::max(norm_scale(ch.Y), norm_scale(ch.X));
  if (lmin < -tol.psd * scale) {
    return {false, lmin, 0.0, "complete positivity violated"};
  }
  return {true, lmin, 0.0, ""};
}

CovMatrix apply_channel(const GaussianChannel& ch, const CovMatrix& g) {
  if (ch.n_modes != g.n_modes) {
    throw std::invalid_argument("apply_channel: mode count mismatch");
  }
  return CovMatrix(g.n_modes, symmetrized(ch.X.transpose() * g.m * ch.X + ch.Y));
}

GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first) {
  if (second.n_modes != first.n_modes) {
    throw std::invalid_argument("compose: mode count mismatch");
  }
  // gamma -> X2^T (X1^T gamma X1 + Y1) X2 + Y2
  return GaussianChannel(
      first.n_modes, first.X * second.X,
      symmetrized(second.X.transpose() * first.Y * second.X + second.Y));
}

double optimal_squeezing(const GaussianChannel& ch, double s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      symmetrized(s * ch.X.transpose() * ch.X + ch.Y), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

EigPair optimal_direction(const GaussianChannel& ch, double s) {
  return smallest_eigenpair(s * ch.X.transpose() * ch.X + ch.Y);
}

PassiveOp optimal_passive(const GaussianChannel& ch, double s, const Vector& phi) {
  if (phi.size() != ch.dim()) {
    throw std::invalid_argument("optimal_passive: direction has wrong dimension");
  }
  const EigPair out = optimal_direction(ch, s);
  const Vector xnu = ch.X * out.vector;
  const double nx = xnu.norm();
  if (nx < 1e-14) {
    // X annihilates the optimal output direction, so the noise term alone
    // realizes the optimum and the input orientation is irrelevant.
    return PassiveOp::identity(ch.n_modes);
  }
  // The output form along nu is (K X nu)^T gamma (K X nu) + nu^T Y nu, so the
  // bound is attained exactly when K sends X nu onto the input soft direction.
  return passive_mapping(xnu / nx, phi);
}

OptimalStep optimal_step(const GaussianChannel& ch, const CovMatrix& g) {
  const EigPair soft = smallest_eigenpair(g.m);
  PassiveOp k = optimal_passive(ch, soft.value, soft.vector);
  CovMatrix out = apply_channel(ch, apply_passive(g, k));
  const double s = squeezing(out);
  return {std::move(k), std::move(out), s};
}

FixedPointResult fixed_point(const GaussianChannel& ch, const Tolerances& tol) {
  const int d = ch.dim();
  const Matrix gain = symmetrized(ch.X.transpose() * ch.X) - Matrix::Identity(d, d);
  Eigen::SelfAdjointEigenSolver<Matrix> eg(gain, Eigen::EigenvaluesOnly);
  if (eg.eigenvalues()(0) >= 0.0) {
    // No direction contracts, so s -> lambda_min(s X^T X + Y) >= s everywhere.
    return {FixedPointStatus::NoFiniteFixedPoint, std::numeric_limits<double>::quiet_NaN()};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> ey(ch.Y);
  if (ey.eigenvalues()(0) <= tol.psd * norm_scale(ch.Y)) {
    return {FixedPointStatus::SingularNoise, std::numeric_limits<double>::quiet_NaN()};
  }
  const Matrix root_inv = ey.eigenvectors() *
                          ey.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                          ey.eigenvectors().transpose();
  // Congruence keeps the inertia of `gain`, so a negative eigenvalue survives.
  Eigen::SelfAdjointEigenSolver<Matrix> em(symmetrized(root_inv * gain * root_inv),
                                           Eigen::EigenvaluesOnly);
  return {FixedPointStatus::Ok, -1.0 / em.eigenvalues()(0)};
}

RingResult ring_passive(const GaussianChannel& ch, const Tolerances& tol) {
  const FixedPointResult fp = fixed_point(ch, tol);
  if (!fp) {
    RingResult r;
    r.status = fp.status == FixedPointStatus::NoFiniteFixedPoint
                   ? RingStatus::NoFiniteFixedPoint
                   : RingStatus::SingularNoise;
    return r;
  }
  const EigPair opt = optimal_direction(ch, fp.s_inf);
  const Vector& psi = opt.vector;
  const Vector xpsi = ch.X * psi;
  const double alpha = xpsi.squaredNorm();
  RingResult r;
  r.s_inf = fp.s_inf;
  r.alpha = alpha;
  r.psi = psi;
  const double nx = xpsi.norm();
  r.k = nx < 1e-14 ? PassiveOp::identity(ch.n_modes) : passive_mapping(xpsi / nx, psi);
  // The convergence guarantee rests on alpha < 1, i.e. the noise being
  // visible along psi at the scale of the fixed point itself.
  const double noise_along = psi.dot(ch.Y * psi);
  r.status = noise_along <= tol.psd * std::max(1.0, fp.s_inf)
                 ? RingStatus::DegenerateContraction
                 : RingStatus::Ok;
  return r;
}

namespace {

// Smallest eigenvalue of [[m11, m12], [m12, m22]].
inline double lambda_min_2x2(double m11, double m12, double m22) {
  const double half_diff = 0.5 * (m11 - m22);
  return 0.5 * (m11 + m22) - std::sqrt(half_diff * half_diff + m12 * m12);
}

double brute_force_grid_1(const GaussianChannel& ch, const CovMatrix& g, int budget) {
  const double g11 = g.m(0, 0), g12 = g.m(0, 1), g22 = g.m(1, 1);
  const double x11 = ch.X(0, 0), x12 = ch.X(0, 1), x21 = ch.X(1, 0), x22 = ch.X(1, 1);
  const double y11 = ch.Y(0, 0), y12 = ch.Y(0, 1), y22 = ch.Y(1, 1);
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(static)
  for (int k = 0; k < budget; ++k) {
    const double th = (2.0 * M_PI * k) / budget;
    const double c = std::cos(th), s = std::sin(th);
    const double a11 = c * c * g11 - 2.0 * c * s * g12 + s * s * g22;
    const double a12 = c * s * (g11 - g22) + (c * c - s * s) * g12;
    const double a22 = s * s * g11 + 2.0 * c * s * g12 + c * c * g22;
    const double b11 = a11 * x11 + a12 * x21, b12 = a11 * x12 + a12 * x22;
    const double b21 = a12 * x11 + a22 * x21, b22 = a12 * x12 + a22 * x22;
    const double m11 = x11 * b11 + x21 * b21 + y11;
    const double m12 = x11 * b12 + x21 * b22 + y12;
    const double m22 = x12 * b12 + x22 * b22 + y22;
    const double v = lambda_min_2x2(m11, m12, m22);
    best = best < v ? best : v;
  }
  return best;
}

double brute_force_haar_2(const GaussianChannel& ch, const CovMatrix& g, int budget,
                          std::uint64_t seed) {
  const Eigen::Matrix4d x = ch.X, y = ch.Y, gm = g.m;
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(static)
  for (int k = 0; k < budget; ++k) {
    Rng rng = fork_rng(seed, static_cast<std::uint64_t>(k));
    const Eigen::Matrix2cd u = haar_unitary_2(rng);
    Eigen::Matrix4d km;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        km(2 * r, 2 * c) = u(r, c).real();
        km(2 * r, 2 * c + 1) = -u(r, c).imag();
        km(2 * r + 1, 2 * c) = u(r, c).imag();
        km(2 * r + 1, 2 * c + 1) = u(r, c).real();
      }
    }
    const Eigen::Matrix4d m = x.transpose() * km.transpose() * gm * km * x + y;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m, Eigen::EigenvaluesOnly);
    const double v = es.eigenvalues()(0);
    best = best < v ? best : v;
  }
  return best;
}

double brute_force_haar_generic(const GaussianChannel& ch, const CovMatrix& g, int budget,
                                std::uint64_t seed) {
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(static)
  for (int k = 0; k < budget; ++k) {
    Rng rng = fork_rng(seed, static_cast<std::uint64_t>(k));
    const PassiveOp op = haar_passive(ch.n_modes, rng);
    const double v = squeezing(apply_channel(ch, apply_passive(g, op)));
    best = best < v ? best : v;
  }
  return best;
}

}  // namespace

double brute_force_single(const GaussianChannel& ch, const CovMatrix& g, int budget,
                          std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("brute_force_single: budget must be positive");
  if (ch.n_modes != g.n_modes) {
    throw std::invalid_argument("brute_force_single: mode count mismatch");
  }
  if (ch.n_modes == 1) return brute_force_grid_1(ch, g, budget);
  if (ch.n_modes == 2) return brute_force_haar_2(ch, g, budget, seed);
  return brute_force_haar_generic(ch, g, budget, seed);
}

double brute_force_single_reference(const GaussianChannel& ch, const CovMatrix& g, int budget,
                                    std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("brute_force_single: budget must be positive");
  if (ch.n_modes != g.n_modes) {
    throw std::invalid_argument("brute_force_single: mode count mismatch");
  }
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < budget; ++k) {
    double v;
    if (ch.n_modes == 1) {
      const PassiveOp op = rotation_single_mode((2.0 * M_PI * k) / budget);
      v = squeezing(apply_channel(ch, apply_passive(g, op)));
    } else {
      Rng rng = fork_rng(seed, static_cast<std::uint64_t>(k));
      const PassiveOp op = haar_passive(ch.n_modes, rng);
      v = squeezing(apply_channel(ch, apply_passive(g, op)));
    }
    best = std::min(best, v);
  }
  return best;
}

}  // namespace gso
