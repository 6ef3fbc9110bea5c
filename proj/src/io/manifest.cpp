#include "lrmoc/io/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "json.hpp"
#include "lrmoc/io/config_file.hpp"
#include "lrmoc/io/io_error.hpp"

#ifndef LRMOC_VERSION
#define LRMOC_VERSION "unknown"
#endif

namespace lrmoc {

const char* tool_version() { return LRMOC_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

RunManifest make_manifest(const std::string& command, const std::vector<ExperimentConfig>& grid) {
  RunManifest m;
  m.tool_version = tool_version();
  m.command = command;
  m.master_seed = grid.empty() ? 0 : grid.front().seed;
  for (const auto& c : grid) m.resolved_configs.push_back(serialize_config(c));
  m.started_at = utc_timestamp();
  return m;
}

std::string render_manifest(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["tool"] = "lrmoc";
  j["tool_version"] = m.tool_version;
  j["command"] = m.command;
  j["master_seed"] = m.master_seed;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  j["resolved_configs"] = m.resolved_configs;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : m.cells) cells.push_back({{"cell", c.description}, {"status", c.status}});
  j["cells"] = cells;
  j["outputs"] = m.outputs;
  return j.dump(2) + "\n";
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << render_manifest(manifest);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace lrmoc
