// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Iterated use of one channel with interstitial passive operations: the
// per-step-optimal schedule, the fixed-K ring schedule, convergence
// diagnostics, and time sweeps over a Lindblad channel family.

#pragma once

#include "gso/channel.hpp"
#include "gso/common.hpp"
#include "gso/dynamics.hpp"
#include "gso/phasespace.hpp"

#include <iosfwd>
#include <vector>

namespace gso {

enum class Schedule { PerStepOptimal, FixedK };

struct TrajectoryStep {
  int index = 0;    // 1-based round number
  PassiveOp k;      // passive op applied before the channel in this round
  CovMatrix gamma;  // state after the round
  double s = 0.0;   // squeezing(gamma)
};

struct Trajectory {
  Schedule schedule = Schedule::PerStepOptimal;
  GaussianChannel channel;
  CovMatrix initial;
  double s0 = 0.0;
  std::vector<TrajectoryStep> steps;

  // s_0, s_1, ..., s_n.
  std::vector<double> squeezing_sequence() const;
};

// Number of rounds and termination of open-ended runs: stop once the
// squeezing no longer moves at relative resolution kStepTolerance, or at
// kMaxAutoSteps.
inline constexpr int kMaxAutoSteps = 100000;
inline constexpr double kStepTolerance = 1e-12;

// Per-step-optimal schedule: each round rotates the current state optimally
// and applies the channel. n >= 1 runs exactly n rounds; n = 0 runs until
// the stopping rule fires.
Trajectory iterate_optimal(const GaussianChannel& ch, const CovMatrix& g0, int n = 0);

// Ring schedule: the SAME passive op before every pass. n as above.
Trajectory iterate_fixed_k(const GaussianChannel& ch, const CovMatrix& g0, const PassiveOp& k,
                           int n = 0);

// Convergence diagnostics of a trajectory against a known limit s_inf.
struct ConvergenceReport {
  bool converged_at_start = false;  // |s0 - s_inf| within 1e-13 resolution
  std::vector<double> ratios;       // (s_{i+1} - s_inf) / (s_i - s_inf), guarded
  double fitted_rate = 0.0;         // |gap_m / gap_0|^{1/m} over the measurable span
  double slope_at_limit = 0.0;      // centered difference of the one-step map at s_inf
  double chord_slope = 0.0;         // (f(s0) - s_inf) / (s0 - s_inf)
};
ConvergenceReport convergence_report(const Trajectory& traj, double s_inf);

// One row of a time sweep over the channel family E_t. Non-finite fields
// (s_inf, alpha, theta_opt when unavailable) are NaN and rendered as empty
// CSV cells; the status column says why.
struct SweepRow {
  double t = 0.0;
  double s_naive = 0.0;  // squeezing after one pass from vacuum, no rotation
  double s_inf = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double theta_opt = std::numeric_limits<double>::quiet_NaN();  // N = 1 only
  RingStatus status = RingStatus::Ok;
};

std::vector<SweepRow> sweep(const LindbladModel& model, const std::vector<double>& t_grid,
                            int quad_steps = 512, const Tolerances& tol = {});

// "t,s_naive,s_inf,alpha,theta_opt,status" with 12 significant digits.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

const char* to_string(RingStatus status);

}  // namespace gso
