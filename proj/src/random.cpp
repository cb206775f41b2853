// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#include "gso/random.hpp"

#include <cmath>
#include <complex>

namespace gso {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& word : s_) word = splitmix64(x);
}

Rng::result_type Rng::operator()() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Rng fork_rng(std::uint64_t seed, std::uint64_t index) {
  // Mix the pair (seed, index) into one word; splitmix64 inside the Rng
  // constructor decorrelates neighbouring indices.
  std::uint64_t x = seed;
  const std::uint64_t a = splitmix64(x);
  x = index;
  const std::uint64_t b = splitmix64(x);
  return Rng(a ^ rotl(b, 32) ^ 0x6a09e667f3bcc908ULL);
}

Eigen::Matrix2cd haar_unitary_2(Rng& rng) {
  using Cx = std::complex<double>;
  // First column: normalized complex Gaussian pair; second column is its
  // orthogonal complement times a random phase.
  Cx z0(rng.normal(), rng.normal());
  Cx z1(rng.normal(), rng.normal());
  double nrm = std::sqrt(std::norm(z0) + std::norm(z1));
  while (nrm < 1e-6) {
    z0 = Cx(rng.normal(), rng.normal());
    z1 = Cx(rng.normal(), rng.normal());
    nrm = std::sqrt(std::norm(z0) + std::norm(z1));
  }
  z0 /= nrm;
  z1 /= nrm;
  const double phi = rng.uniform(0.0, 2.0 * M_PI);
  const Cx w(std::cos(phi), std::sin(phi));
  Eigen::Matrix2cd u;
  u(0, 0) = z0;
  u(1, 0) = z1;
  u(0, 1) = -w * std::conj(z1);
  u(1, 1) = w * std::conj(z0);
  return u;
}

ComplexMatrix haar_unitary(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: n must be positive");
  using Cx = std::complex<double>;
  if (n == 1) {
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    ComplexMatrix u(1, 1);
    u(0, 0) = Cx(std::cos(phi), std::sin(phi));
    return u;
  }
  if (n == 2) return haar_unitary_2(rng);
  // Ginibre + QR with the R-diagonal phase fix, which makes the distribution
  // exactly Haar rather than QR-convention dependent.
  ComplexMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) g(j, k) = Cx(rng.normal(), rng.normal());
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Cx d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0 ? d / mag : Cx(1.0, 0.0));
  }
  return q;
}

PassiveOp haar_passive(int n_modes, Rng& rng) {
  return PassiveOp(n_modes, realify(haar_unitary(n_modes, rng)));
}

Matrix random_symplectic(int n_modes, Rng& rng, double r_max) {
  const PassiveOp k1 = haar_passive(n_modes, rng);
  const PassiveOp k2 = haar_passive(n_modes, rng);
  Vector d(2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    const double r = rng.uniform(-r_max, r_max);
    d(2 * j) = std::exp(r);
    d(2 * j + 1) = std::exp(-r);
  }
  return k1.m * d.asDiagonal() * k2.m;
}

CovMatrix random_cm(int n_modes, Rng& rng, double r_max, double noise) {
  const Matrix s = random_symplectic(n_modes, rng, r_max);
  Matrix g = s.transpose() * s;
  if (noise > 0.0) {
    Matrix a(2 * n_modes, 2 * n_modes);
    for (int j = 0; j < a.rows(); ++j)
      for (int k = 0; k < a.cols(); ++k) a(j, k) = rng.normal();
    g += (noise / (2.0 * n_modes)) * (a.transpose() * a);
  }
  return CovMatrix(n_modes, symmetrized(g));
}

CovMatrix random_cm_with_squeezing(int n_modes, double s, Rng& rng) {
  if (s <= 0.0) throw std::invalid_argument("random_cm_with_squeezing: s must be positive");
  // Per-mode diagonal (s_j, m_j): mode 0 carries the global minimum s, the
  // partner entry and all other modes sit strictly above it while keeping
  // each mode's uncertainty product at least one.
  Vector d(2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    const double sj = j == 0 ? s : s * rng.uniform(1.2, 2.0);
    const double mj = std::max(sj, 1.0 / sj) * rng.uniform(1.1, 1.9);
    d(2 * j) = sj;
    d(2 * j + 1) = mj;
  }
  const PassiveOp k = haar_passive(n_modes, rng);
  return CovMatrix(n_modes, symmetrized(k.m.transpose() * Matrix(d.asDiagonal()) * k.m));
}

GaussianChannel random_channel(int n_modes, Rng& rng, double r_max) {
  const int dim = 2 * n_modes;
  const Matrix x = random_symplectic(n_modes, rng, r_max) *
                   (0.75 + 0.5 * rng.uniform());  // not necessarily symplectic
  const Matrix sigma = symplectic_form(n_modes);
  // Minimal noise: Y0 = lambda_max of the Hermitian defect i(sigma - X^T sigma X),
  // then margin and a small random PSD bump keep the CP condition strict.
  const ComplexMatrix defect =
      std::complex<double>(0.0, 1.0) *
      (sigma - x.transpose() * sigma * x).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(defect, Eigen::EigenvaluesOnly);
  const double need = std::max(0.0, es.eigenvalues()(dim - 1));
  Matrix a(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) a(j, k) = rng.normal();
  const Matrix y = (need + 0.05 + 0.2 * rng.uniform()) * Matrix::Identity(dim, dim) +
                   (0.05 / dim) * (a.transpose() * a);
  return GaussianChannel(n_modes, x, symmetrized(y));
}

GaussianChannel random_channel_with_fixed_point(int n_modes, Rng& rng, double r_max) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    GaussianChannel ch = random_channel(n_modes, rng, r_max);
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        symmetrized(ch.X.transpose() * ch.X), Eigen::EigenvaluesOnly);
    // Fixed point exists iff X^T X - I has a negative eigenvalue; keep it
    // comfortably away from zero so tests are well conditioned.
    if (es.eigenvalues()(0) < 0.95) return ch;
  }
  throw std::runtime_error("random_channel_with_fixed_point: rejection sampling failed");
}

GeneralChannel random_general_channel(int n_modes, Rng& rng, double r_max) {
  const int dim = 2 * n_modes;
  // Two-part pure-state covariance matrix on 2n modes, partially transposed
  // on the second half, then split into blocks.
  const CovMatrix big = random_cm(2 * n_modes, rng, r_max, 0.3);
  const Matrix tilde = partial_transpose_second_half(big.m);
  return GeneralChannel(n_modes, tilde.topLeftCorner(dim, dim),
                        tilde.bottomRightCorner(dim, dim), tilde.topRightCorner(dim, dim));
}

}  // namespace gso
