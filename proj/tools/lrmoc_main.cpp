#include <cstdio>
#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "lrmoc/harness/config.hpp"
#include "lrmoc/harness/fits.hpp"
#include "lrmoc/io/io_error.hpp"
#include "lrmoc/io/manifest.hpp"

#ifdef LRMOC_HAVE_OPENMP
#include <omp.h>
#endif

using namespace lrmoc;

namespace {

int report(const char* category, const std::string& message, int code) {
  std::cerr << "error[" << category << "]: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement-only Clifford circuits with power-law parity checks"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  cli::CommonOptions opts;
  bool serial = false;
  int threads = 0;
  app.add_flag("--serial", serial, "Run ensembles on the serial reference path");
  app.add_option("--threads", threads, "OpenMP thread count (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);

  std::string config_path;
  auto add_config_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "Configuration file")->required();
    sub->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--max-cells", opts.max_cells, "Largest accepted grid")->capture_default_str();
    return sub;
  };
  auto* sweep = add_config_command("sweep", "Phase-diagram grid over (alpha, density, basis) and N");
  auto* trajectory = add_config_command("trajectory", "Checkpointed time series for each grid cell");
  auto* purify = add_config_command("purify", "Ancilla purification timescales");
  auto* xxz = add_config_command("xxz", "Projective XXZ p sweep with mutual-information profiles");
  auto* crossings = add_config_command("crossings", "Cut-crossing estimator against Monte Carlo");
  std::size_t crossing_layers = 10000;
  crossings->add_option("--layers", crossing_layers, "Layers sampled per cell")->capture_default_str();
  auto* statmech = app.add_subcommand("statmech-check", "Replica identity suite");
  auto* verify = app.add_subcommand("verify", "Stabilizer simulator against the dense oracle");
  std::size_t n_max = 8;
  std::size_t circuits = 200;
  std::uint64_t seed = 1;
  verify->add_option("--n-max", n_max, "Largest qubit count")->capture_default_str();
  verify->add_option("--circuits", circuits, "Number of random circuits")->capture_default_str();
  verify->add_option("--seed", seed, "Master seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return cli::kOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << tool_version() << '\n';
    return cli::kOk;
  } catch (const CLI::ParseError& e) {
    return report("usage", e.what(), cli::kUsage);
  }

  opts.exec = serial ? Execution::Serial : Execution::Parallel;
#ifdef LRMOC_HAVE_OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*sweep) return cli::run_sweep(config_path, opts);
    if (*trajectory) return cli::run_trajectory(config_path, opts);
    if (*purify) return cli::run_purify(config_path, opts);
    if (*xxz) return cli::run_xxz(config_path, opts);
    if (*crossings) return cli::run_crossings(config_path, crossing_layers, opts);
    if (*statmech) return cli::run_statmech_check();
    if (*verify) return cli::run_verify(n_max, circuits, seed);
  } catch (const ConfigError& e) {
    return report("config", e.what(), cli::kConfig);
  } catch (const IoError& e) {
    return report("io", e.what(), cli::kIo);
  } catch (const std::exception& e) {
    return report("runtime", e.what(), cli::kRuntime);
  }
  return report("usage", "no subcommand", cli::kUsage);
}
