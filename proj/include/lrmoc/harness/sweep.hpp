#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lrmoc/harness/analysis.hpp"

namespace lrmoc {

/// Configs sharing (alpha, density, basis) differing only in N, in grid order.
struct SweepCell {
  ExperimentConfig base;
  std::vector<std::size_t> sizes;
};

std::vector<SweepCell> group_cells(const std::vector<ExperimentConfig>& grid);

struct PhaseDiagramRow {
  double alpha = 0.0;
  double density = 0.0;
  BasisMode basis;
  std::vector<std::size_t> sizes;
  /// One entry per size, ascending.
  std::vector<SizeEstimate> per_size;
  /// Steady-state values at the largest N.
  SteadyStateEstimate s;
  SteadyStateEstimate mi;
  SteadyStateEstimate tmi;
  /// Empty when fewer than four sizes or the fit is degenerate.
  std::optional<FitReport> entanglement;
  std::optional<FitReport> purification;
  /// "ok" or the failure message of this cell.
  std::string status = "ok";
};

struct PhaseDiagramTable {
  std::vector<PhaseDiagramRow> rows;
};

/// Runs every cell; a failing cell records its error and the sweep goes on.
/// Purification contests run for cells whose configs set the purification flag.
PhaseDiagramTable sweep(const std::vector<ExperimentConfig>& grid, Execution exec = Execution::Parallel);

}  // namespace lrmoc
