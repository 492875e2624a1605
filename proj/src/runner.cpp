#include "nls2d/runner.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "nls2d/propagator.hpp"
#include "nls2d/solutions.hpp"

namespace nls2d {

namespace fs = std::filesystem;

namespace {

std::string sci(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

std::string time_label(Real t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", t);
  return buf;
}

}  // namespace

Grid2D make_grid(const RunConfig& config) {
  return Grid2D{build_line(config.x0, config.n_inner, config.n_outer),
                spectral::FourierGrid<Real>(config.m, config.l_y)};
}

void write_snapshot(const std::string& path, const State2D& state, const Grid2D& grid) {
  std::ofstream out = open_out(path);
  out << "x_physical,y,re_u,im_u\n";
  const RVector x = grid.line.physical_x();
  for (int i = 0; i < grid.rows(); ++i)
    for (int j = 0; j < grid.cols(); ++j)
      out << sci(x[i]) << ',' << sci(grid.y.points[j]) << ',' << sci(state.values(i, j).real()) << ','
          << sci(state.values(i, j).imag()) << '\n';
}

void write_timeseries(const std::string& path, const RunDiagnostics& diag) {
  std::ofstream out = open_out(path);
  out << "t,linf,energy,energy_drift,tau_residual\n";
  for (std::size_t i = 0; i < diag.size(); ++i)
    out << sci(diag.times[i]) << ',' << sci(diag.linf[i]) << ',' << sci(diag.energy[i]) << ','
        << sci(diag.energy_drift[i]) << ',' << sci(diag.tau_residual[i]) << '\n';
}

RunOutcome run(const RunConfig& config) {
  config.validate();
  const std::string hash = config_hash_hex(config);
  fs::create_directories(config.output_dir);
  const std::string stem = (fs::path(config.output_dir) / ("run_" + hash)).string();

  RunOutcome outcome{make_grid(config), {}, {}, {}, std::nullopt, EnergyMode::standard, {}};
  const Grid2D& grid = outcome.grid;
  outcome.energy_mode = config.energy_mode;
  outcome.initial = sample_initial(config.initial, grid, config.kappa);

  const Real h = (config.t_end - config.initial.t0) / config.n_t;
  std::vector<Real> targets = config.snapshot_times;
  std::sort(targets.begin(), targets.end());
  std::size_t next = 0;
  auto take_snapshots = [&](const State2D& s) {
    while (next < targets.size() && targets[next] <= s.time + 0.5 * h) {
      const std::string path = stem + "_snapshot_t" + time_label(s.time) + ".csv";
      write_snapshot(path, s, grid);
      outcome.files.push_back(path);
      ++next;
    }
  };
  take_snapshots(outcome.initial);

  if (config.study == Study::convergence) {
    outcome.convergence = convergence_study(config.convergence_nt, config.n_inner, config.n_outer, config.x0,
                                            config.t_end);
    const std::string path = stem + "_convergence.csv";
    std::ofstream out = open_out(path);
    out << "n_t,error,energy\n";
    for (std::size_t i = 0; i < outcome.convergence->n_t.size(); ++i)
      out << outcome.convergence->n_t[i] << ',' << sci(outcome.convergence->error[i]) << ','
          << sci(outcome.convergence->energy[i]) << '\n';
    outcome.files.push_back(path);
  }

  // main evolution (for the convergence study: the finest configured n_t)
  LinearStepPlan plan(grid, config.kappa);
  const SplittingScheme scheme = SplittingScheme::yoshida4();
  const Monitor monitor(grid, config.lambda, outcome.energy_mode);
  EvolveOptions opts;
  opts.t_end = config.t_end;
  opts.n_steps = config.n_t;
  opts.cadence = config.diagnostic_cadence;
  opts.on_step = take_snapshots;
  EvolveResult result = evolve(outcome.initial, opts, plan, scheme, monitor);
  outcome.final_state = std::move(result.state);
  outcome.diagnostics = std::move(result.diagnostics);
  const RunDiagnostics& diag = outcome.diagnostics;

  const std::string ts_path = stem + "_timeseries.csv";
  write_timeseries(ts_path, diag);
  outcome.files.push_back(ts_path);
  const std::string final_path = stem + "_final.csv";
  write_snapshot(final_path, outcome.final_state, grid);
  outcome.files.push_back(final_path);

  const std::string meta_path = stem + ".meta";
  std::ofstream meta = open_out(meta_path);
  meta << serialize(config);
  meta << "config_hash: " << hash << "\n";
  meta << "code_version: " << kCodeVersion << "\n";
  meta << "stop_reason: " << to_string(diag.stop_reason) << "\n";
  meta << "stop_time: " << format_real(diag.stop_reason == StopReason::none ? outcome.final_state.time : diag.stop_time)
       << "\n";
  meta << "last_valid_time: " << format_real(diag.last_valid_time) << "\n";
  meta << "records: " << diag.size() << "\n";
  meta << "divergence_warnings: " << diag.divergence_warnings << "\n";
  const Real max_tau = diag.tau_residual.empty() ? 0 : *std::max_element(diag.tau_residual.begin(), diag.tau_residual.end());
  meta << "max_tau_residual: " << format_real(max_tau) << "\n";
  meta << "final_energy_drift: " << format_real(diag.energy_drift.empty() ? 0 : diag.energy_drift.back()) << "\n";
  if (outcome.convergence) meta << "convergence_slope: " << format_real(outcome.convergence->slope) << "\n";
  outcome.files.push_back(meta_path);
  return outcome;
}

}  // namespace nls2d
