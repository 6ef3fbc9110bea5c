#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lrmoc/harness/config.hpp"

namespace lrmoc {

const char* tool_version();

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

struct CellStatus {
  std::string description;
  std::string status;
};

struct RunManifest {
  std::string tool_version;
  std::string command;
  std::uint64_t master_seed = 0;
  /// Serialized single-cell configs in grid order.
  std::vector<std::string> resolved_configs;
  std::string started_at;
  std::string finished_at;
  std::vector<CellStatus> cells;
  /// File names written next to the manifest.
  std::vector<std::string> outputs;
};

RunManifest make_manifest(const std::string& command, const std::vector<ExperimentConfig>& grid);

std::string render_manifest(const RunManifest& manifest);

/// IoError naming the path on failure.
void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace lrmoc
