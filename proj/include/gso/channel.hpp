// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic Gaussian channels gamma -> X^T gamma X + Y and the optimal
// interleaving of passive operations with a fixed channel.

#pragma once

#include "gso/common.hpp"
#include "gso/phasespace.hpp"

namespace gso {

struct GaussianChannel {
  int n_modes = 0;
  Matrix X;
  Matrix Y;

  GaussianChannel() = default;
  GaussianChannel(int n, Matrix x, Matrix y);
  int dim() const { return 2 * n_modes; }
};

// Complete positivity: X^T i sigma X + Y - i sigma >= 0 (up to tol.psd,
// relative to the matrix scale). Y >= 0 follows and is not checked separately.
Validity is_valid_channel(const GaussianChannel& ch, const Tolerances& tol = {});

// X^T gamma X + Y, symmetrized.
CovMatrix apply_channel(const GaussianChannel& ch, const CovMatrix& g);

// Channel equal to running `first`, then `second`.
GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first);

// Best squeezing reachable in one use of the channel from any input with
// squeezing s: the smallest eigenvalue of s X^T X + Y.
double optimal_squeezing(const GaussianChannel& ch, double s);

// Direction realizing optimal_squeezing: unit eigenvector of s X^T X + Y.
EigPair optimal_direction(const GaussianChannel& ch, double s);

// Passive operation attaining the one-step optimum when the input state has
// its smallest eigenvalue s in direction phi: K aligns the channel image of
// the optimal output direction with phi, so the soft input quadrature is the
// one the output optimum samples.
PassiveOp optimal_passive(const GaussianChannel& ch, double s, const Vector& phi);

// One optimal round applied to a concrete state: rotate, then apply the
// channel. `s` always equals squeezing(state) and optimal_squeezing(ch, s_in).
struct OptimalStep {
  PassiveOp k;
  CovMatrix state;
  double s;
};
OptimalStep optimal_step(const GaussianChannel& ch, const CovMatrix& g);

// Asymptotic squeezing of unbounded optimal iteration. The solve uses the
// symmetric congruence Y^{-1/2} (X^T X - I) Y^{-1/2}, which shares its
// spectrum with (X^T X - I) Y^{-1}.
enum class FixedPointStatus {
  Ok,
  NoFiniteFixedPoint,  // X^T X >= I: iteration never improves squeezing
  SingularNoise,       // Y numerically singular: the formula needs Y^{-1}
};
struct FixedPointResult {
  FixedPointStatus status = FixedPointStatus::Ok;
  double s_inf = std::numeric_limits<double>::quiet_NaN();
  explicit operator bool() const { return status == FixedPointStatus::Ok; }
};
FixedPointResult fixed_point(const GaussianChannel& ch, const Tolerances& tol = {});

// Fixed passive operation for a ring geometry: the same K before every pass.
// K maps X psi back onto psi, where psi is the optimal direction at the fixed
// point; alpha = <psi|X^T X|psi> is the per-pass contraction of the gap to
// s_inf. DegenerateContraction flags alpha ~ 1 (noise invisible along psi
// relative to the fixed point scale); results are still returned.
enum class RingStatus {
  Ok,
  DegenerateContraction,
  NoFiniteFixedPoint,
  SingularNoise,
};
struct RingResult {
  RingStatus status = RingStatus::Ok;
  double s_inf = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  PassiveOp k;
  Vector psi;
  explicit operator bool() const {
    return status == RingStatus::Ok || status == RingStatus::DegenerateContraction;
  }
};
RingResult ring_passive(const GaussianChannel& ch, const Tolerances& tol = {});

// Sampled minimum of squeezing(apply_channel(ch, K^T gamma K)) over passive
// K. N = 1 scans a uniform grid of `budget` rotation angles; N >= 2 draws
// `budget` Haar-random passive ops from `seed`. Converges to
// optimal_squeezing(ch, squeezing(gamma)) from above. Deterministic for a
// fixed seed, including under parallel evaluation.
double brute_force_single(const GaussianChannel& ch, const CovMatrix& g, int budget,
                          std::uint64_t seed = kDefaultSeed);

// Plain sequential evaluation through the public apply/squeezing path, with
// the same angle grid and sample streams. Kept as the reference the tuned
// kernels in brute_force_single are checked and benchmarked against.
double brute_force_single_reference(const GaussianChannel& ch, const CovMatrix& g, int budget,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace gso
