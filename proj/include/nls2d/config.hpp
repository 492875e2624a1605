#ifndef NLS2D_CONFIG_HPP_
#define NLS2D_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nls2d/diagnostics.hpp"
#include "nls2d/solutions.hpp"
#include "nls2d/types.hpp"

namespace nls2d {

enum class Study { evolve, convergence };

struct RunConfig {
  std::string preset_name;
  Study study = Study::evolve;
  int kappa = 1;
  Real x0 = 1;
  int n_inner = 100;
  int n_outer = 101;
  int m = 128;
  Real l_y = 3;
  Real t_end = 0.5;
  int n_t = 1000;
  std::vector<int> convergence_nt;  // only for Study::convergence
  InitialData initial;
  Real lambda = 1;
  EnergyMode energy_mode = EnergyMode::standard;
  int diagnostic_cadence = 1;
  std::vector<Real> snapshot_times;
  std::string output_dir = "out";

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

/// Flat "key: value" text, one field per line, doubles with 17 significant digits.
std::string serialize(const RunConfig& config);
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// FNV-1a over the serialised config without output_dir.
std::uint64_t config_hash(const RunConfig& config);
std::string config_hash_hex(const RunConfig& config);

std::string format_real(Real value);

/// All named experiment presets, in catalogue order.
std::vector<RunConfig> presets();
std::optional<RunConfig> find_preset(std::string_view name);

}  // namespace nls2d

#endif  // NLS2D_CONFIG_HPP_
