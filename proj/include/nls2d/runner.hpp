#ifndef NLS2D_RUNNER_HPP_
#define NLS2D_RUNNER_HPP_

// Orchestrates one configured experiment and writes its files into
// config.output_dir:
//   run_<hash>.meta                 key: value metadata
//   run_<hash>_timeseries.csv       t,linf,energy,energy_drift,tau_residual
//   run_<hash>_snapshot_t<time>.csv x_physical,y,re_u,im_u
//   run_<hash>_final.csv            last valid state, same layout
//   run_<hash>_convergence.csv      n_t,error,energy (convergence study only)
// <hash> is config_hash_hex(config).

#include <optional>
#include <string>
#include <vector>

#include "nls2d/config.hpp"
#include "nls2d/convergence.hpp"
#include "nls2d/diagnostics.hpp"
#include "nls2d/state.hpp"

namespace nls2d {

inline constexpr const char* kCodeVersion = "nls2d 1.0.0";
inline constexpr const char* kOutputDirEnv = "NLS2D_OUTPUT_DIR";

struct RunOutcome {
  Grid2D grid;
  State2D initial;
  State2D final_state;
  RunDiagnostics diagnostics;
  std::optional<ConvergenceTable> convergence;
  EnergyMode energy_mode = EnergyMode::standard;
  std::vector<std::string> files;
};

/// Validates, runs and writes all output files. Throws std::invalid_argument
/// for an invalid config and std::runtime_error for I/O failures.
RunOutcome run(const RunConfig& config);

Grid2D make_grid(const RunConfig& config);

/// Column layout used by snapshot files; also used for the final state.
void write_snapshot(const std::string& path, const State2D& state, const Grid2D& grid);
void write_timeseries(const std::string& path, const RunDiagnostics& diag);

}  // namespace nls2d

#endif  // NLS2D_RUNNER_HPP_
