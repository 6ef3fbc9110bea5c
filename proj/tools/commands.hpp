#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include "lrmoc/core/execution.hpp"

namespace lrmoc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kConfig = 3,
  kIo = 4,
  kCheckFailed = 5,
  kRuntime = 6,
};

struct CommonOptions {
  std::filesystem::path out_dir = ".";
  Execution exec = Execution::Parallel;
  std::size_t max_cells = 4096;
};

int run_sweep(const std::filesystem::path& config, const CommonOptions& opts);
int run_trajectory(const std::filesystem::path& config, const CommonOptions& opts);
int run_purify(const std::filesystem::path& config, const CommonOptions& opts);
int run_xxz(const std::filesystem::path& config, const CommonOptions& opts);
int run_crossings(const std::filesystem::path& config, std::size_t layers, const CommonOptions& opts);
int run_statmech_check();
int run_verify(std::size_t n_max, std::size_t circuits, std::uint64_t seed);

}  // namespace lrmoc::cli
