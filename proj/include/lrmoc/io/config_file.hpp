#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "lrmoc/harness/config.hpp"

namespace lrmoc {

struct ParseOptions {
  std::size_t max_cells = 4096;
};

/// Flat `key = value` text, one key per line, `#` starts a comment.
///
/// Grid keys take comma lists and expand to their Cartesian product in the
/// order basis, p, alpha, density, N (N varies fastest):
///   N, alpha, density, basis (random | single | xxz), p (xxz only).
/// Scalar keys: trajectories, depth, checkpoints, seed, purification,
/// window, observables (subset of s, mi, tmi, ancilla, bell, or none), kappa_r_min,
/// kappa_r_max. N, alpha, density and basis are required.
std::vector<ExperimentConfig> parse_config_text(const std::string& text, const ParseOptions& options = {});

/// Reads and parses a file; IoError when unreadable.
std::vector<ExperimentConfig> parse_config(const std::filesystem::path& path, const ParseOptions& options = {});

/// Single-cell text that parses back to the same config.
std::string serialize_config(const ExperimentConfig& config);

/// Shortest decimal text that reads back to the same double; "inf" for +inf.
std::string format_shortest(double value);

}  // namespace lrmoc
