// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Timing comparison of the OpenMP search kernels against the sequential
// reference implementations, plus the sweep driver under different thread
// counts. Results go to stdout; no arguments.

#include "gso/channel.hpp"
#include "gso/dynamics.hpp"
#include "gso/protocols.hpp"
#include "gso/random.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double timed(const char* label, Fn&& fn) {
  const auto start = Clock::now();
  const double value = fn();
  const double elapsed = seconds_since(start);
  std::printf("  %-28s %9.3f ms   result %.12g\n", label, elapsed * 1e3, value);
  return elapsed;
}

void bench_brute_force(int n_modes, long long budget) {
  gso::Rng rng(2024 + n_modes);
  const gso::GaussianChannel ch = gso::random_channel(n_modes, rng);
  const gso::CovMatrix g = gso::random_cm(n_modes, rng);
  std::printf("brute force, N = %d, %lld samples\n", n_modes, budget);
  const double tuned =
      timed("tuned kernel", [&] { return gso::brute_force_single(ch, g, budget); });
  const double reference = timed("sequential reference",
                                 [&] { return gso::brute_force_single_reference(ch, g, budget); });
  std::printf("  speedup %.2fx\n\n", reference / tuned);
}

void bench_sweep() {
  gso::Matrix h(2, 2);
  h << 0.5, 0.0, 0.0, 1.0;
  const gso::LindbladModel model(1, h, 0.1);
  std::vector<double> grid(64);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 3.0 * double(i + 1) / double(grid.size());

  std::printf("time sweep, %zu rows, 512 quadrature panels\n", grid.size());
#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const double serial = timed("1 thread", [&] { return gso::sweep(model, grid).back().s_inf; });
  omp_set_num_threads(max_threads);
  char label[32];
  std::snprintf(label, sizeof label, "%d thread(s)", max_threads);
  const double parallel = timed(label, [&] { return gso::sweep(model, grid).back().s_inf; });
  std::printf("  speedup %.2fx\n", serial / parallel);
#else
  timed("single thread", [&] { return gso::sweep(model, grid).back().s_inf; });
#endif
}

}  // namespace

int main() {
  bench_brute_force(1, 2'000'000);
  bench_brute_force(2, 200'000);
  bench_sweep();
  return 0;
}
