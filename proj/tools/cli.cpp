// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Subcommands: validate | single | iterate |
// fixed-point | lindblad | sweep | entangle. Exit codes: 0 success, 1 for a
// domain-invalid input or a channel without a finite fixed point, 2 for
// parse or I/O failures.

#include <CLI11.hpp>
#include <json.hpp>

#include "gso/channel.hpp"
#include "gso/common.hpp"
#include "gso/dynamics.hpp"
#include "gso/entanglement.hpp"
#include "gso/general_channel.hpp"
#include "gso/io.hpp"
#include "gso/phasespace.hpp"
#include "gso/protocols.hpp"
#include "gso/random.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using gso::CovMatrix;
using gso::GaussianChannel;
using gso::Matrix;
using gso::PassiveOp;
using gso::Tolerances;
using gso::Vector;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) entries.push_back(v(i));
  return entries;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Shared flags and the per-subcommand inputs, bound to CLI11 options.
struct Options {
  unsigned long long seed = gso::kDefaultSeed;
  double tol_psd = Tolerances{}.psd;
  std::string channel_path;
  std::string state_path;
  std::string general_path;
  std::string model_path;
  std::string k_path;
  std::string csv_path;
  std::string out_path;
  bool fixed_k = false;
  bool log2 = false;
  int steps = 0;
  int samples = 100;
  int quad_steps = 512;
  long long budget = 0;
  double time = 0.0;
  double tmax = 0.0;

  Tolerances tolerances() const { return Tolerances{tol_psd, tol_psd / 10.0}; }
};

int cmd_validate(const Options& opt) {
  const Tolerances tol = opt.tolerances();
  json report;
  gso::Validity v;
  if (!opt.channel_path.empty()) {
    report["kind"] = "channel";
    v = gso::is_valid_channel(gso::load_channel(opt.channel_path), tol);
  } else if (!opt.state_path.empty()) {
    report["kind"] = "state";
    v = gso::is_valid_cm(gso::load_state(opt.state_path).m, tol);
  } else {
    report["kind"] = "general_channel";
    v = gso::is_valid_general_channel(gso::load_general_channel(opt.general_path), tol);
  }
  report["valid"] = v.ok;
  report["min_eigenvalue"] = v.min_eigenvalue;
  if (!v.ok) report["detail"] = v.detail;
  emit(report);
  return v.ok ? kExitOk : kExitDomain;
}

int cmd_single(const Options& opt) {
  const GaussianChannel ch = gso::load_channel(opt.channel_path);
  const CovMatrix g = gso::load_state(opt.state_path);
  const gso::OptimalStep step = gso::optimal_step(ch, g);
  json out;
  out["s_in"] = gso::squeezing(g);
  out["s_out"] = step.s;
  out["K"] = matrix_to_json(step.k.m);
  out["state_out"] = matrix_to_json(step.state.m);
  if (opt.budget > 0) {
    out["s_brute"] = gso::brute_force_single(ch, g, opt.budget, opt.seed);
    out["budget"] = opt.budget;
  }
  emit(out);
  return kExitOk;
}

int cmd_iterate(const Options& opt) {
  const GaussianChannel ch = gso::load_channel(opt.channel_path);
  const CovMatrix g = gso::load_state(opt.state_path);
  gso::Trajectory traj;
  if (opt.fixed_k || !opt.k_path.empty()) {
    PassiveOp k;
    if (!opt.k_path.empty()) {
      const CovMatrix raw = gso::load_state(opt.k_path);  // same n_modes+matrix schema
      const gso::Validity pv = gso::is_passive(raw.m, opt.tolerances());
      if (!pv.ok) {
        std::cerr << "iterate: supplied K is not passive: " << pv.detail << "\n";
        return kExitDomain;
      }
      k = PassiveOp(raw.n_modes, raw.m);
    } else {
      const gso::RingResult ring = gso::ring_passive(ch, opt.tolerances());
      if (!ring) {
        std::cerr << "iterate: no ring operation: " << gso::to_string(ring.status) << "\n";
        return kExitDomain;
      }
      k = ring.k;
    }
    traj = gso::iterate_fixed_k(ch, g, k, opt.steps);
  } else {
    traj = gso::iterate_optimal(ch, g, opt.steps);
  }

  json out;
  out["schedule"] = traj.schedule == gso::Schedule::PerStepOptimal ? "optimal" : "fixed_k";
  out["s"] = traj.squeezing_sequence();
  json steps = json::array();
  for (const gso::TrajectoryStep& step : traj.steps) {
    json s;
    s["index"] = step.index;
    s["s"] = step.s;
    s["K"] = matrix_to_json(step.k.m);
    s["state"] = matrix_to_json(step.gamma.m);
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  emit(out);

  if (!opt.csv_path.empty()) {
    std::ostringstream csv;
    csv << "step,s\n";
    const std::vector<double> seq = traj.squeezing_sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%zu,%.12g\n", i, seq[i]);
      csv << buf;
    }
    gso::write_text_file(opt.csv_path, csv.str());
  }
  return kExitOk;
}

int cmd_fixed_point(const Options& opt) {
  const GaussianChannel ch = gso::load_channel(opt.channel_path);
  const gso::RingResult ring = gso::ring_passive(ch, opt.tolerances());
  json out;
  out["status"] = gso::to_string(ring.status);
  if (!ring) {
    emit(out);
    return kExitDomain;
  }
  out["s_inf"] = ring.s_inf;
  out["alpha"] = ring.alpha;
  out["K_inf"] = matrix_to_json(ring.k.m);
  out["psi_inf"] = vector_to_json(ring.psi);
  emit(out);
  return kExitOk;
}

int cmd_lindblad(const Options& opt) {
  const gso::LindbladModel model = gso::load_model(opt.model_path);
  const GaussianChannel ch = gso::channel_at_time(model, opt.time, opt.quad_steps);
  std::cout << gso::channel_to_json(ch);
  return kExitOk;
}

int cmd_sweep(const Options& opt) {
  const gso::LindbladModel model = gso::load_model(opt.model_path);
  if (!(opt.tmax > 0.0)) {
    std::cerr << "sweep: --tmax must be > 0\n";
    return kExitDomain;
  }
  std::vector<double> grid(opt.samples);
  for (int i = 0; i < opt.samples; ++i) grid[i] = opt.tmax * double(i + 1) / double(opt.samples);
  const std::vector<gso::SweepRow> rows =
      gso::sweep(model, grid, opt.quad_steps, opt.tolerances());
  if (opt.out_path.empty()) {
    gso::write_sweep_csv(std::cout, rows);
  } else {
    std::ostringstream csv;
    gso::write_sweep_csv(csv, rows);
    gso::write_text_file(opt.out_path, csv.str());
  }
  return kExitOk;
}

int cmd_entangle(const Options& opt) {
  const GaussianChannel ch = gso::load_channel(opt.channel_path);
  const gso::EntanglementBound bound =
      gso::entanglement_bound(ch, opt.steps, opt.tolerances());
  json out;
  out["status"] = bound ? "ok" : (bound.status == gso::FixedPointStatus::NoFiniteFixedPoint
                                      ? "no_fixed_point"
                                      : "singular_noise");
  if (!bound) {
    emit(out);
    return kExitDomain;
  }
  out["s_opt"] = bound.s_opt;
  out["E_N"] = opt.log2 ? bound.value / std::log(2.0) : bound.value;
  out["log_base"] = opt.log2 ? "2" : "e";
  out["rounds"] = opt.steps;
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal passive use of noisy Gaussian squeezing devices"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for sampled searches")->capture_default_str();
  app.add_option("--tolerance", opt.tol_psd,
                 "PSD tolerance; passivity checks run 10x tighter")
      ->envname("GSO_TOLERANCE")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* validate = app.add_subcommand("validate", "Check a state or channel file");
  auto* vc = validate->add_option("--channel", opt.channel_path, "Channel JSON file");
  auto* vs = validate->add_option("--state", opt.state_path, "State JSON file");
  auto* vg = validate->add_option("--general", opt.general_path, "General channel JSON file");
  vc->excludes(vs)->excludes(vg);
  vs->excludes(vg);

  CLI::App* single = app.add_subcommand("single", "Optimal single use of a channel");
  single->add_option("--channel", opt.channel_path, "Channel JSON file")->required();
  single->add_option("--state", opt.state_path, "Input state JSON file")->required();
  single->add_option("--brute-force", opt.budget,
                     "Also report a sampled search over this many passive ops");

  CLI::App* iterate = app.add_subcommand("iterate", "Iterate the channel with passive ops");
  iterate->add_option("--channel", opt.channel_path, "Channel JSON file")->required();
  iterate->add_option("--state", opt.state_path, "Initial state JSON file")->required();
  iterate->add_option("--steps", opt.steps, "Rounds; 0 runs until the squeezing settles");
  auto* fk = iterate->add_flag("--fixed-k", opt.fixed_k, "Use the ring operation every round");
  iterate->add_option("--k-file", opt.k_path, "Use this passive op every round")->excludes(fk);
  iterate->add_option("--csv", opt.csv_path, "Also write step,s rows to this file");

  CLI::App* fixed_point = app.add_subcommand("fixed-point", "Asymptotic squeezing analysis");
  fixed_point->add_option("--channel", opt.channel_path, "Channel JSON file")->required();

  CLI::App* lindblad = app.add_subcommand("lindblad", "Channel of a lossy quadratic model");
  lindblad->add_option("--model", opt.model_path, "Model JSON file")->required();
  lindblad->add_option("--time", opt.time, "Evolution time")
      ->required()
      ->check(CLI::NonNegativeNumber);
  lindblad->add_option("--quad-steps", opt.quad_steps, "Quadrature panels")
      ->check(CLI::PositiveNumber);

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep interaction time, CSV output");
  sweep->add_option("--model", opt.model_path, "Model JSON file")->required();
  sweep->add_option("--tmax", opt.tmax, "Largest time in the grid")->required();
  sweep->add_option("--samples", opt.samples, "Grid points on (0, tmax]")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", opt.out_path, "CSV path; stdout when omitted");
  sweep->add_option("--quad-steps", opt.quad_steps, "Quadrature panels")
      ->check(CLI::PositiveNumber);

  CLI::App* entangle = app.add_subcommand("entangle", "Entanglement bound of a channel");
  entangle->add_option("--channel", opt.channel_path, "Channel JSON file")->required();
  entangle->add_option("--steps", opt.steps, "Rounds from vacuum; 0 means the fixed point");
  entangle->add_flag("--log2", opt.log2, "Report the bound in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (validate->parsed()) {
      if (opt.channel_path.empty() && opt.state_path.empty() && opt.general_path.empty()) {
        std::cerr << "validate: pass one of --channel, --state, --general\n";
        return kExitParse;
      }
      return cmd_validate(opt);
    }
    if (single->parsed()) return cmd_single(opt);
    if (iterate->parsed()) return cmd_iterate(opt);
    if (fixed_point->parsed()) return cmd_fixed_point(opt);
    if (lindblad->parsed()) return cmd_lindblad(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (entangle->parsed()) return cmd_entangle(opt);
  } catch (const gso::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const gso::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
