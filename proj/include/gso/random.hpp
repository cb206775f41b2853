// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random instance generators. All sampling goes through a
// small counter-forkable generator so that parallel sweeps can hand every
// work item its own stream and reproduce the serial results bit for bit.

#pragma once

#include "gso/channel.hpp"
#include "gso/general_channel.hpp"
#include "gso/phasespace.hpp"

#include <array>
#include <cstdint>

namespace gso {

// xoshiro256++ with splitmix64 seeding. Cheap to construct, which matters:
// brute-force searches fork one generator per sample.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~static_cast<result_type>(0); }
  result_type operator()();

  // Uniform on [0, 1).
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi);
  // Standard normal via Box-Muller (no cached spare; keeps forks stateless).
  double normal();

 private:
  std::array<std::uint64_t, 4> s_;
};

// Stream `index` derived from `seed`; independent of how many streams were
// drawn before it. Used to make parallel loops order-independent.
Rng fork_rng(std::uint64_t seed, std::uint64_t index);

// Haar-distributed U(n).
ComplexMatrix haar_unitary(int n, Rng& rng);

// Fixed-size U(2) sampler: same draw order and distribution as
// haar_unitary(2, rng), allocation-free for hot loops.
Eigen::Matrix2cd haar_unitary_2(Rng& rng);

// Haar-random passive operation on n modes.
PassiveOp haar_passive(int n_modes, Rng& rng);

// Random symplectic matrix: passive * local squeezers * passive, with
// log-squeezings drawn uniformly from [-r_max, r_max].
Matrix random_symplectic(int n_modes, Rng& rng, double r_max = 0.5);

// Valid covariance matrix S^T S (+ optional extra classical noise).
CovMatrix random_cm(int n_modes, Rng& rng, double r_max = 0.5, double noise = 0.25);

// Valid covariance matrix whose smallest eigenvalue is exactly s (< 1 for a
// squeezed state), with the corresponding direction Haar-rotated.
CovMatrix random_cm_with_squeezing(int n_modes, double s, Rng& rng);

// Random strictly-CP deterministic channel. X has singular values in
// [exp(-r_max), exp(r_max)]; Y is the minimal noise making the channel CP
// plus margin and a small random PSD part.
GaussianChannel random_channel(int n_modes, Rng& rng, double r_max = 0.5);

// As random_channel, but resampled until the asymptotic fixed point exists
// (some singular value of X exceeds 1 while the noise stays nonsingular).
GaussianChannel random_channel_with_fixed_point(int n_modes, Rng& rng, double r_max = 0.5);

// Random valid non-deterministic channel, built from a random pure-state
// covariance matrix on 2n modes via the Schur-complement parameterization.
GeneralChannel random_general_channel(int n_modes, Rng& rng, double r_max = 0.5);

}  // namespace gso
