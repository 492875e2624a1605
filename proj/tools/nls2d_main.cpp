// Command line front end.
//
//   nls2d run --config <path> [--out <dir>]
//   nls2d run --preset <name> [--out <dir>]
//   nls2d presets
//   nls2d convergence --nt 100,200,400 [--out <dir>]
//
// NLS2D_OUTPUT_DIR overrides the configured output directory; --out wins over both.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nls2d/config.hpp"
#include "nls2d/runner.hpp"

namespace {

std::vector<int> parse_nt_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int n = std::stoi(item, &used);
    if (used != item.size() || n < 1) throw std::invalid_argument("--nt: bad entry '" + item + "'");
    out.push_back(n);
  }
  return out;
}

void apply_output_override(nls2d::RunConfig& config, const std::string& out_flag) {
  if (const char* env = std::getenv(nls2d::kOutputDirEnv); env != nullptr && *env != '\0') config.output_dir = env;
  if (!out_flag.empty()) config.output_dir = out_flag;
}

int execute(const nls2d::RunConfig& config) {
  const nls2d::RunOutcome out = nls2d::run(config);
  const auto& d = out.diagnostics;
  std::cout << "config_hash " << nls2d::config_hash_hex(config) << "\n";
  std::cout << "stop_reason " << nls2d::to_string(d.stop_reason) << " last_valid_time "
            << nls2d::format_real(d.last_valid_time) << "\n";
  if (out.convergence) {
    for (std::size_t i = 0; i < out.convergence->n_t.size(); ++i)
      std::cout << "n_t " << out.convergence->n_t[i] << " error " << out.convergence->error[i] << "\n";
    std::cout << "slope " << out.convergence->slope << "\n";
  }
  for (const auto& f : out.files) std::cout << "wrote " << f << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D cubic NLS solver on a compactified line times a periodic interval"};
  app.require_subcommand(1);

  std::string config_path, preset_name, out_dir;
  auto* run_cmd = app.add_subcommand("run", "Run a configured or preset experiment");
  auto* cfg_opt = run_cmd->add_option("--config", config_path, "key: value config file");
  auto* preset_opt = run_cmd->add_option("--preset", preset_name, "preset name (see 'presets')");
  cfg_opt->excludes(preset_opt);
  run_cmd->add_option("--out", out_dir, "output directory");

  auto* presets_cmd = app.add_subcommand("presets", "List the experiment presets");

  std::string nt_text;
  std::string conv_out;
  auto* conv_cmd = app.add_subcommand("convergence", "Time-step convergence study on Peregrine data");
  conv_cmd->add_option("--nt", nt_text, "comma separated step counts")->required();
  conv_cmd->add_option("--out", conv_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*presets_cmd) {
      for (const auto& p : nls2d::presets()) {
        std::cout << p.preset_name << "  kappa=" << p.kappa << " N_I=" << p.n_inner << " N_II=" << p.n_outer
                  << " M=" << p.m << " L_y=" << nls2d::format_real(p.l_y) << " N_t=" << p.n_t
                  << " t_end=" << nls2d::format_real(p.t_end) << " initial=" << nls2d::to_string(p.initial.kind)
                  << "\n";
      }
      return 0;
    }
    if (*run_cmd) {
      nls2d::RunConfig config;
      if (!config_path.empty()) {
        config = nls2d::load_config(config_path);
      } else if (!preset_name.empty()) {
        auto p = nls2d::find_preset(preset_name);
        if (!p) {
          std::cerr << "error: unknown preset '" << preset_name << "'\n";
          return 2;
        }
        config = *p;
      } else {
        std::cerr << "error: run needs --config or --preset\n";
        return 2;
      }
      apply_output_override(config, out_dir);
      return execute(config);
    }
    if (*conv_cmd) {
      nls2d::RunConfig config = *nls2d::find_preset("convergence");
      config.convergence_nt = parse_nt_list(nt_text);
      config.n_t = config.convergence_nt.empty() ? 1 : config.convergence_nt.back();
      apply_output_override(config, conv_out);
      return execute(config);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
