// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#include "gso/protocols.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace gso {

std::vector<double> Trajectory::squeezing_sequence() const {
  std::vector<double> s;
  s.reserve(steps.size() + 1);
  s.push_back(s0);
  for (const TrajectoryStep& step : steps) s.push_back(step.s);
  return s;
}

namespace {

template <typename StepFn>
Trajectory run_schedule(Schedule schedule, const GaussianChannel& ch, const CovMatrix& g0, int n,
                        StepFn&& step_fn) {
  if (n < 0) throw std::invalid_argument("iterate: step count must be >= 0");
  if (ch.n_modes != g0.n_modes) throw std::invalid_argument("iterate: mode count mismatch");
  Trajectory traj;
  traj.schedule = schedule;
  traj.channel = ch;
  traj.initial = g0;
  traj.s0 = squeezing(g0);
  const int limit = n > 0 ? n : kMaxAutoSteps;
  traj.steps.reserve(n > 0 ? n : 64);
  CovMatrix gamma = g0;
  double s_prev = traj.s0;
  for (int i = 1; i <= limit; ++i) {
    TrajectoryStep step = step_fn(gamma);
    step.index = i;
    gamma = step.gamma;
    const double s = step.s;
    traj.steps.push_back(std::move(step));
    if (n == 0 && std::abs(s - s_prev) < kStepTolerance * std::max(1.0, std::abs(s_prev))) {
      break;
    }
    s_prev = s;
  }
  return traj;
}

}  // namespace

Trajectory iterate_optimal(const GaussianChannel& ch, const CovMatrix& g0, int n) {
  return run_schedule(Schedule::PerStepOptimal, ch, g0, n, [&](const CovMatrix& gamma) {
    OptimalStep opt = optimal_step(ch, gamma);
    return TrajectoryStep{0, std::move(opt.k), std::move(opt.state), opt.s};
  });
}

Trajectory iterate_fixed_k(const GaussianChannel& ch, const CovMatrix& g0, const PassiveOp& k,
                           int n) {
  if (k.n_modes != ch.n_modes) {
    throw std::invalid_argument("iterate_fixed_k: passive op dimension mismatch");
  }
  return run_schedule(Schedule::FixedK, ch, g0, n, [&](const CovMatrix& gamma) {
    CovMatrix next = apply_channel(ch, apply_passive(gamma, k));
    const double s = squeezing(next);
    return TrajectoryStep{0, k, std::move(next), s};
  });
}

ConvergenceReport convergence_report(const Trajectory& traj, double s_inf) {
  const std::vector<double> s = traj.squeezing_sequence();
  if (s.size() < 3) {
    throw std::invalid_argument("convergence_report: trajectory needs at least 3 points");
  }
  const double scale = std::max(1.0, std::abs(s_inf));
  const double guard = 1e-13 * scale;
  ConvergenceReport rep;
  rep.converged_at_start = std::abs(s.front() - s_inf) <= guard;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double gap = s[i] - s_inf;
    if (std::abs(gap) <= guard) break;  // converged; later ratios are noise
    rep.ratios.push_back((s[i + 1] - s_inf) / gap);
  }
  // Fitted rate: |g_m / g_0|^{1/m} over the reliably measured span. A gap is
  // reliable while it clears both the resolution of s_inf and the absolute
  // floor of an eigenvalue of gamma_i, which grows with the antisqueezed
  // directions; past that point the sequence is rounding noise, and inside it
  // the from-start mean is exactly the quantity the contraction bound caps.
  const auto gap_floor = [&](std::size_t i) {
    const Matrix& gamma = i == 0 ? traj.initial.m : traj.steps[i - 1].gamma.m;
    return std::max(1e-8 * scale, 1e-9 * norm_scale(gamma));
  };
  std::size_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i] - s_inf) <= gap_floor(i)) break;
    m = i;
  }
  rep.fitted_rate =
      m >= 1 ? std::pow(std::abs((s[m] - s_inf) / (s[0] - s_inf)), 1.0 / double(m)) : 0.0;
  // Slope of the one-step optimal map at the limit, by centered difference.
  const double h = 1e-6 * std::max(1.0, std::abs(s_inf));
  const double lo = std::max(0.0, s_inf - h);
  rep.slope_at_limit = (optimal_squeezing(traj.channel, s_inf + h) -
                        optimal_squeezing(traj.channel, lo)) /
                       (s_inf + h - lo);
  const double start_gap = s.front() - s_inf;
  rep.chord_slope = std::abs(start_gap) <= guard
                        ? rep.slope_at_limit
                        : (optimal_squeezing(traj.channel, s.front()) - s_inf) / start_gap;
  return rep;
}

std::vector<SweepRow> sweep(const LindbladModel& model, const std::vector<double>& t_grid,
                            int quad_steps, const Tolerances& tol) {
  for (double t : t_grid) {
    if (!(t > 0.0)) throw std::invalid_argument("sweep: all t values must be > 0");
  }
  std::vector<SweepRow> rows(t_grid.size());
  const int count = static_cast<int>(t_grid.size());
  // Rows are independent; each is written to its own slot, so the result is
  // identical however the loop is scheduled.
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    const double t = t_grid[i];
    const GaussianChannel ch = channel_at_time(model, t, quad_steps);
    SweepRow row;
    row.t = t;
    row.s_naive = squeezing(apply_channel(ch, CovMatrix::vacuum(model.n_modes)));
    const RingResult ring = ring_passive(ch, tol);
    row.status = ring.status;
    if (ring) {
      row.s_inf = ring.s_inf;
      row.alpha = ring.alpha;
      if (model.n_modes == 1) row.theta_opt = angle_of(ring.k);
    }
    rows[i] = std::move(row);
  }
  return rows;
}

const char* to_string(RingStatus status) {
  switch (status) {
    case RingStatus::Ok: return "ok";
    case RingStatus::DegenerateContraction: return "degenerate_contraction";
    case RingStatus::NoFiniteFixedPoint: return "no_fixed_point";
    case RingStatus::SingularNoise: return "singular_noise";
  }
  return "unknown";
}

namespace {

void append_cell(std::string& line, double value) {
  line.push_back(',');
  if (std::isnan(value)) return;  // empty cell, status column explains
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  line += buf;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "t,s_naive,s_inf,alpha,theta_opt,status\n";
  for (const SweepRow& row : rows) {
    char head[40];
    std::snprintf(head, sizeof head, "%.12g", row.t);
    std::string line(head);
    append_cell(line, row.s_naive);
    append_cell(line, row.s_inf);
    append_cell(line, row.alpha);
    append_cell(line, row.theta_opt);
    line.push_back(',');
    line += to_string(row.status);
    out << line << '\n';
  }
}

}  // namespace gso
